#include "whf/fft.hpp"

#include "whf/error.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace whf {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(int n, int sign)
{
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (!p)
        fail(ErrorCode::InvalidArgument, "FFT planning failed");
    cache.emplace(key, p);
    return p;
}

} // namespace

void fft_inplace(std::vector<cplx>& data, int sign)
{
    if (data.empty())
        return;
    fftw_plan p = plan_for(static_cast<int>(data.size()), sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, ptr, ptr);
}

} // namespace whf
