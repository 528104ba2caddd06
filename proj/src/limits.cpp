#include "birdtrack/limits.hpp"

namespace birdtrack {

Limits& limits() {
    static Limits instance;
    return instance;
}

}  // namespace birdtrack
