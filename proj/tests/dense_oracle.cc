#include "dense_oracle.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace oracle {

namespace {

Mat single(char letter) {
    Mat m{2, std::vector<cplx>(4, 0)};
    switch (letter) {
        case 'I':
            m.at(0, 0) = m.at(1, 1) = 1;
            break;
        case 'X':
            m.at(0, 1) = m.at(1, 0) = 1;
            break;
        case 'Y':
            m.at(0, 1) = cplx(0, -1);
            m.at(1, 0) = cplx(0, 1);
            break;
        case 'Z':
            m.at(0, 0) = 1;
            m.at(1, 1) = -1;
            break;
        default:
            std::fprintf(stderr, "bad letter %c\n", letter);
            std::abort();
    }
    return m;
}

Mat kron(const Mat &x, const Mat &y) {
    Mat out{x.dim * y.dim, std::vector<cplx>(x.dim * y.dim * x.dim * y.dim, 0)};
    for (size_t a = 0; a < x.dim; a++)
        for (size_t b = 0; b < x.dim; b++)
            for (size_t c = 0; c < y.dim; c++)
                for (size_t d = 0; d < y.dim; d++)
                    out.at(a * y.dim + c, b * y.dim + d) = x.at(a, b) * y.at(c, d);
    return out;
}

}  // namespace

Mat identity(size_t dim) {
    Mat m{dim, std::vector<cplx>(dim * dim, 0)};
    for (size_t i = 0; i < dim; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

Mat mul(const Mat &x, const Mat &y) {
    Mat out{x.dim, std::vector<cplx>(x.dim * x.dim, 0)};
    for (size_t i = 0; i < x.dim; i++)
        for (size_t k = 0; k < x.dim; k++) {
            cplx v = x.at(i, k);
            if (v == cplx(0)) continue;
            for (size_t j = 0; j < x.dim; j++) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

Mat scale(const Mat &x, cplx s) {
    Mat out = x;
    for (auto &v : out.a) v *= s;
    return out;
}

bool approx_equal(const Mat &x, const Mat &y, double tol) {
    if (x.dim != y.dim) return false;
    for (size_t i = 0; i < x.a.size(); i++) {
        if (std::abs(x.a[i] - y.a[i]) > tol) return false;
    }
    return true;
}

Mat letters_matrix(const std::string &letters) {
    // The last qubit is the most significant tensor factor.
    Mat m = identity(1);
    for (size_t k = letters.size(); k-- > 0;) {
        m = kron(m, single(letters[k]));
    }
    return m;
}

Mat pauli_matrix(const graphbell::PauliString &p) {
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::string letters;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        letters += graphbell::letter_char(p.letter_at(q));
    }
    return scale(letters_matrix(letters), ipow[p.phase_exp()]);
}

Mat generator_matrix(const graphbell::GraphSpec &g, size_t i) {
    std::string letters(g.n, 'I');
    letters[i - 1] = 'X';
    for (auto [a, b] : g.edges) {
        if (static_cast<size_t>(a) == i) letters[b - 1] = 'Z';
        if (static_cast<size_t>(b) == i) letters[a - 1] = 'Z';
    }
    return letters_matrix(letters);
}

Mat element_matrix(const graphbell::GraphSpec &g, uint32_t mask) {
    Mat m = identity(size_t{1} << g.n);
    for (size_t i = 1; i <= g.n; i++) {
        if (mask >> (i - 1) & 1) m = mul(m, generator_matrix(g, i));
    }
    return m;
}

std::pair<int, std::string> decompose(const Mat &m, size_t n) {
    const char kLetters[] = "IXYZ";
    size_t total = size_t{1} << (2 * n);
    for (size_t code = 0; code < total; code++) {
        std::string letters;
        for (size_t q = 0; q < n; q++) letters += kLetters[(code >> (2 * q)) & 3];
        Mat p = letters_matrix(letters);
        // Quick reject on the column of basis state 0.
        bool maybe = true;
        for (size_t r = 0; r < m.dim && maybe; r++) {
            maybe = (std::abs(p.at(r, 0)) > 0.5) == (std::abs(m.at(r, 0)) > 0.5);
        }
        if (!maybe) continue;
        if (approx_equal(m, p)) return {+1, letters};
        if (approx_equal(m, scale(p, -1))) return {-1, letters};
    }
    std::fprintf(stderr, "matrix is not a Hermitian Pauli operator\n");
    std::abort();
}

int max_satisfied(const std::vector<std::pair<int, std::string>> &terms, size_t n) {
    int best = 0;
    for (uint64_t a = 0; a < (uint64_t{1} << (3 * n)); a++) {
        int count = 0;
        for (const auto &[sign, letters] : terms) {
            int v = sign;
            for (size_t q = 0; q < n; q++) {
                size_t l = letters[q] == 'X' ? 0 : letters[q] == 'Y' ? 1 : letters[q] == 'Z' ? 2 : 3;
                if (l < 3 && (a >> (3 * q + l) & 1)) v = -v;
            }
            count += v == 1;
        }
        best = std::max(best, count);
    }
    return best;
}

std::vector<cplx> graph_state(const graphbell::GraphSpec &g) {
    size_t dim = size_t{1} << g.n;
    Mat h{2, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0)}};
    Mat hn = identity(1);
    for (size_t q = 0; q < g.n; q++) hn = kron(hn, h);
    std::vector<cplx> psi(dim, 0);
    for (size_t r = 0; r < dim; r++) psi[r] = hn.at(r, 0);
    for (auto [a, b] : g.edges) {
        // CZ = (I + Z_a + Z_b - Z_a Z_b) / 2
        std::string za(g.n, 'I'), zb(g.n, 'I'), zab(g.n, 'I');
        za[a - 1] = 'Z';
        zb[b - 1] = 'Z';
        zab[a - 1] = zab[b - 1] = 'Z';
        Mat cz = identity(dim);
        Mat ma = letters_matrix(za), mb = letters_matrix(zb), mab = letters_matrix(zab);
        for (size_t i = 0; i < cz.a.size(); i++) cz.a[i] = (cz.a[i] + ma.a[i] + mb.a[i] - mab.a[i]) / 2.0;
        std::vector<cplx> next(dim, 0);
        for (size_t r = 0; r < dim; r++)
            for (size_t c = 0; c < dim; c++) next[r] += cz.at(r, c) * psi[c];
        psi = next;
    }
    return psi;
}

double expectation(const std::vector<cplx> &psi, const Mat &m) {
    cplx acc = 0;
    for (size_t r = 0; r < m.dim; r++)
        for (size_t c = 0; c < m.dim; c++) acc += std::conj(psi[r]) * m.at(r, c) * psi[c];
    return acc.real();
}

}  // namespace oracle
