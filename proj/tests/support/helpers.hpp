#pragma once

#include <hcm/matrix.hpp>

#include <string>
#include <vector>

// Matrix literals for tests.

inline hcm::Mat imat(const std::vector<std::vector<long>>& rows) {
    hcm::Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hcm::Rational(rows[i][j]);
    return m;
}

inline hcm::Mat qmat(const std::vector<std::vector<std::string>>& rows) {
    hcm::Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = hcm::Rational::parse(rows[i][j]);
    return m;
}
