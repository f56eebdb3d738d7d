#include "sortkit/bench/measure.hpp"

namespace sortkit::bench {

void validate(const OneArrayRepeatParams& p) {
    if (p.iterations < 1) throw ConfigurationError("iterations must be at least 1");
    if (p.measures < 1) throw ConfigurationError("measures must be at least 1");
}

void validate(const ArrayInRowParams& p) {
    if (p.array_size < 1) throw ConfigurationError("array size must be at least 1");
    if (p.measures < 1) throw ConfigurationError("measures must be at least 1");
    if (p.number_of_arrays != 0) {
        const std::size_t bytes = p.number_of_arrays * p.array_size * sizeof(SortItem);
        if (bytes <= p.cache_bytes) {
            throw ConfigurationError("array-in-row needs more than " + std::to_string(p.cache_bytes) +
                                     " bytes of input, got " + std::to_string(bytes) +
                                     "; raise --arrays or lower --cache-bytes");
        }
    }
}

}  // namespace sortkit::bench
