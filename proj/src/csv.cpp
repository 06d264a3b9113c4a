#include "fracwright/csv.hpp"

#include <charconv>
#include <cmath>

namespace fw {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_batch_csv(std::ostream& os, const SampleBatch& batch) {
    std::string line = "index";
    for (std::size_t k = 0; k < batch.dim; ++k) line += ",component_" + std::to_string(k);
    os << line << '\n';
    for (std::size_t i = 0; i < batch.n_samples; ++i) {
        line = std::to_string(i);
        for (double v : batch.row(i)) {
            line += ',';
            line += format_double(v);
        }
        os << line << '\n';
    }
}

}  // namespace fw
