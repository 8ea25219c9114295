#include "quill/series.hpp"

namespace quill {

RatSeries series_sqrt_like_compose(const std::vector<Rat>& outer, const RatSeries& inner) {
    return inner.compose_outer(outer);
}

}  // namespace quill
