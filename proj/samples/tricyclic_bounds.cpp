// Bounds of the inverse degree and the first Zagreb index over tricyclic
// graphs of order 8, with the sequences that attain them.

#include "majext/majext.hpp"

#include <iostream>

int main() {
    using namespace majext;
    const auto cls = CyclomaticClass::make(8, 3);

    std::cout << render_text(extremal_family(cls)) << "\n";
    for (const auto& index : {IndexSpec::inverse_degree(), IndexSpec::general_zagreb(2)}) {
        auto report = bounds(cls, index);
        report.verified = verify_bounds(cls, index).verdict;
        std::cout << render_text(report);
    }

    const SimpleGraph g = realize(DegreeSequence({7, 3, 3, 3, 1, 1, 1, 1}));
    std::cout << "\n" << export_dot(g, "tricyclic");
}
