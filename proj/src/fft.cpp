#include "flns/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "flns/errors.hpp"

namespace flns {

namespace {

// One cached FFTW plan pair per (d, n).  Plans are created on a persistent
// buffer owned by the cache and always executed on that buffer (copy in / copy
// out), which keeps alignment legal and makes execution thread-safe behind the
// mutex.  FFTW_ESTIMATE keeps plan creation cheap and deterministic.
struct PlanEntry {
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t count = 0;
};

std::map<std::pair<int, int>, PlanEntry>& plan_cache() {
    static std::map<std::pair<int, int>, PlanEntry> cache;
    return cache;
}

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

PlanEntry& entry_for(const Grid& g) {
    auto key = std::make_pair(g.d, g.n);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PlanEntry e;
    e.count = g.modes();
    e.buf = fftw_alloc_complex(e.count);
    if (!e.buf) throw NumericError("fft: allocation failed");
    int dims[3] = {g.n, g.n, g.n};
    e.fwd = fftw_plan_dft(g.d, dims, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    e.bwd = fftw_plan_dft(g.d, dims, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!e.fwd || !e.bwd) throw NumericError("fft: plan creation failed");
    return cache.emplace(key, e).first->second;
}

} // namespace

void dft_inplace(const Grid& grid, Complex* data, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    PlanEntry& e = entry_for(grid);
    std::memcpy(static_cast<void*>(e.buf), static_cast<const void*>(data), e.count * sizeof(Complex));
    fftw_execute(sign < 0 ? e.fwd : e.bwd);
    std::memcpy(static_cast<void*>(data), static_cast<const void*>(e.buf), e.count * sizeof(Complex));
}

SpectralField to_spectral(const std::vector<double>& samples, const Grid& grid, int components) {
    if (components < 1) throw std::invalid_argument("to_spectral: components must be >= 1");
    std::size_t nm = grid.modes();
    if (samples.size() != nm * static_cast<std::size_t>(components))
        throw std::invalid_argument("to_spectral: sample count does not match grid");

    SpectralField f(grid, components);
    double inv = 1.0 / static_cast<double>(nm);
    std::vector<Complex> buf(nm);
    for (int c = 0; c < components; ++c) {
        const double* src = samples.data() + static_cast<std::size_t>(c) * nm;
        for (std::size_t i = 0; i < nm; ++i) buf[i] = Complex(src[i], 0.0);
        dft_inplace(grid, buf.data(), -1);
        for (std::size_t i = 0; i < nm; ++i) f.at(c, i) = buf[i] * inv;
    }
    f.refresh_mean_flag();
    return f;
}

std::vector<double> to_physical(const SpectralField& f, double hermitian_tol) {
    double asym = f.relative_hermitian_asymmetry();
    if (asym > hermitian_tol) {
        std::ostringstream msg;
        msg << "to_physical: coefficients are not Hermitian-symmetric "
            << "(max relative asymmetry " << asym << ", tolerance " << hermitian_tol << ")";
        throw NumericError(msg.str());
    }
    std::size_t nm = f.modes();
    std::vector<double> out(nm * static_cast<std::size_t>(f.components));
    std::vector<Complex> buf(nm);
    for (int c = 0; c < f.components; ++c) {
        for (std::size_t i = 0; i < nm; ++i) buf[i] = f.at(c, i);
        dft_inplace(f.grid, buf.data(), +1);
        double* dst = out.data() + static_cast<std::size_t>(c) * nm;
        for (std::size_t i = 0; i < nm; ++i) dst[i] = buf[i].real();
    }
    return out;
}

} // namespace flns
