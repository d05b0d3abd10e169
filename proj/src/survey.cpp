#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "fiberjoin/classify.hpp"
#include "fiberjoin/error.hpp"

namespace fiberjoin {

namespace {

std::uint64_t bounded_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out) || out > cap)
      throw Error(Errc::BoundsTooLarge, "survey would enumerate more than " + std::to_string(cap) + " matrices");
  }
  return out;
}

// Odometer over [1, max]^n.
bool advance(std::vector<std::int64_t>& digits, std::int64_t max) {
  for (auto& d : digits) {
    if (d < max) {
      ++d;
      return true;
    }
    d = 1;
  }
  return false;
}

KahlerMatrix build(const std::vector<std::int64_t>& digits, const SurveyOptions& opt) {
  const std::size_t m = opt.base.size();
  auto row = [&](std::size_t j) { return KahlerRow(digits.begin() + static_cast<std::ptrdiff_t>(j * m),
                                                   digits.begin() + static_cast<std::ptrdiff_t>((j + 1) * m)); };
  if (opt.split) return expand_split(row(0), row(1), *opt.split);
  KahlerMatrix k;
  for (int j = 0; j < opt.rows; ++j) k.push_back(row(static_cast<std::size_t>(j)));
  return k;
}

SurveyEntry evaluate(const CheckedSpec& spec) {
  return {spec.classes(), invariant_report(spec), classify(spec)};
}

}  // namespace

SurveyReport survey(const SurveyOptions& options) {
  if (options.base.factors.empty()) throw Error(Errc::EmptyBase, "survey needs a base");
  if (options.max_entry < 0) throw Error(Errc::InvalidArgument, "max_entry must be non-negative");
  if (!options.split && options.rows < 2) throw Error(Errc::ShapeMismatch, "survey needs at least two rows");

  const std::size_t free_rows = options.split ? 2 : static_cast<std::size_t>(options.rows);
  const std::size_t width = free_rows * options.base.size();

  SurveyReport report;
  report.options = options;
  report.version = kToolVersion;
  report.enumerated = bounded_power(static_cast<std::uint64_t>(options.max_entry), width, options.cap);
  if (report.enumerated == 0) return report;

  std::set<KahlerMatrix> seen;
  std::vector<CheckedSpec> specs;
  std::vector<std::int64_t> digits(width, 1);
  do {
    const auto checked = validate({options.base, build(digits, options), options.split});
    auto canonical = canonicalize(checked);
    if (seen.insert(canonical.classes()).second) specs.push_back(std::move(canonical));
  } while (advance(digits, options.max_entry));

  std::sort(specs.begin(), specs.end(),
            [](const CheckedSpec& a, const CheckedSpec& b) { return a.classes() < b.classes(); });

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  const std::size_t chunk = (specs.size() + threads - 1) / threads;

  std::vector<std::future<std::vector<SurveyEntry>>> jobs;
  for (std::size_t begin = 0; begin < specs.size(); begin += chunk) {
    const std::size_t end = std::min(specs.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&specs, begin, end] {
      std::vector<SurveyEntry> part;
      part.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) part.push_back(evaluate(specs[i]));
      return part;
    }));
  }
  for (auto& job : jobs) {
    auto part = job.get();
    std::move(part.begin(), part.end(), std::back_inserter(report.entries));
  }
  return report;
}

}  // namespace fiberjoin
