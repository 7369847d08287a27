#include "instanton/verify.hpp"

#include <cstdio>

int main()
{
    int failed = 0;
    auto results = inst::acceptance_checks();
    for (size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        std::printf("%s [%2zu] %s (%.2fs): %s\n", r.ok ? "PASS" : "FAIL", k + 1, r.name.c_str(), r.seconds, r.detail.c_str());
        failed += !r.ok;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", results.size() - failed, results.size());
    return failed ? 1 : 0;
}
