#pragma once

#include <cstdlib>
#include <vector>

#include "rings.hpp"

namespace talex {

// Diagonalization of an integer matrix by unimodular row and column
// operations.  Row operations are applied but not recorded; the column
// transform V is returned because callers need the kernel description.
// diag[k] is the pivot at (k,k), 0 when the rank ran out first; entries are
// not divisibility-chained, which is enough to read off unit pivots.
struct SmithColumnForm {
    std::vector<Int> diag;
    std::vector<std::vector<Int>> v; // cols x cols, unimodular
};

inline SmithColumnForm smith_column_form(std::vector<std::vector<Int>> a, int rows, int cols) {
    SmithColumnForm out;
    out.v.assign(cols, std::vector<Int>(cols, 0));
    for (int j = 0; j < cols; ++j) out.v[j][j] = 1;
    int steps = std::min(rows, cols);
    out.diag.assign(steps, Int(0));

    for (int k = 0; k < steps; ++k) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    if (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return out; // remaining block is zero; diag stays 0
            std::swap(a[pi], a[k]);
            if (pj != k) {
                for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][k]);
                for (int i = 0; i < cols; ++i) std::swap(out.v[i][pj], out.v[i][k]);
            }
            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0) continue;
                Int q = a[i][k] / a[k][k];
                if (q != 0)
                    for (int j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
                if (a[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0) continue;
                Int q = a[k][j] / a[k][k];
                if (q != 0)
                    for (int i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
                if (q != 0)
                    for (int i = 0; i < cols; ++i) out.v[i][j] -= q * out.v[i][k];
                if (a[k][j] != 0) clean = false;
            }
            if (clean) break;
        }
        out.diag[k] = a[k][k];
    }
    return out;
}

} // namespace talex
