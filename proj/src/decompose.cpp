#include "fermat/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fermat/chars.hpp"
#include "fermat/lattice.hpp"

namespace fermat {

namespace {

int reflection_sign(std::int64_t m) { return m % 2 == 0 ? 1 : -1; }

// Gamma for the fully fixed label with index nu, before the stan sign flip.
int fixed_gamma(int n, std::int64_t m, int nu) {
  if (residue(m - nu, 3) == 0) return 1;
  if (residue(m - nu + 2, 3) == 0 && m * (n - 3) >= n) return -1;
  return 0;
}

Rational signed_half_range(int n, std::int64_t m, std::int64_t X, Rho rho) {
  const int count = half_range_difference(n, m, X);
  if (rho == Rho::triv) return reflection_sign(m) * count;
  if (rho == Rho::sgn) return -reflection_sign(m) * count;
  return 0;
}

}  // namespace

std::int64_t MultiplicityTable::dimension() const {
  std::int64_t total = 0;
  for (const auto& [label, mult] : entries) total += irrep_degree(label) * mult;
  return total;
}

std::int64_t MultiplicityTable::multiplicity_of(const IrrepLabel& label) const {
  for (const auto& [l, mult] : entries) {
    if (l == label) return mult;
  }
  return 0;
}

CoefficientBundle coeffs(int n, std::int64_t m, const IrrepLabel& label) {
  if (m < 1) throw std::invalid_argument("coefficients are defined for m >= 1");
  const std::int64_t k = label.kappa;
  const std::int64_t l = label.lambda;
  CoefficientBundle out;
  switch (label.orbit) {
    case OrbitClass::fully_fixed: {
      out.A = triangle_correction(n, m, m - k, m - k);
      out.B = signed_half_range(n, m, m - k, label.rho);
      const int gamma = fixed_gamma(n, m, label.nu);
      out.Gamma = label.rho == Rho::stan ? -gamma : gamma;
      break;
    }
    case OrbitClass::diagonal: {
      const int sum = triangle_correction(n, m, m - k, m - k) + triangle_correction(n, m, m - k, m + 2 * k) +
                      triangle_correction(n, m, m + 2 * k, m - k);
      out.A = Rational(sum, 3);
      out.B = signed_half_range(n, m, m - k, label.rho);
      break;
    }
    case OrbitClass::generic: {
      const std::int64_t w = m + k + l;
      const int sum = triangle_correction(n, m, m - k, m - l) + triangle_correction(n, m, m - l, m - k) +
                      triangle_correction(n, m, m - k, w) + triangle_correction(n, m, w, m - k) +
                      triangle_correction(n, m, m - l, w) + triangle_correction(n, m, w, m - l);
      out.A = Rational(sum, 6);
      break;
    }
  }
  out.A.canonicalize();
  return out;
}

Rational multiplicity_rational(int n, std::int64_t m, const IrrepLabel& label) {
  if (m < 0) throw std::invalid_argument("tensor power must be >= 0");
  if (m == 0) {
    const bool trivial = label.orbit == OrbitClass::fully_fixed && label.nu == 0 && label.rho == Rho::triv;
    return trivial ? 1 : 0;
  }
  const CoefficientBundle c = coeffs(n, m, label);
  Rational value = Rational(irrep_degree(label), 6) * (Rational(band_base(n, m)) + c.A) + c.B / 2 +
                   Rational(c.Gamma, 3);
  value.canonicalize();
  return value;
}

std::int64_t multiplicity(int n, std::int64_t m, const IrrepLabel& label) {
  const Rational value = multiplicity_rational(n, m, label);
  if (value.get_den() != 1 || value < 0) {
    throw std::logic_error("closed-form multiplicity of " + to_string(label) + " at n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + " is " + value.get_str());
  }
  return to_int64(value.get_num());
}

MultiplicityTable decompose(int n, std::int64_t m) {
  MultiplicityTable table{n, m, {}};
  for (const IrrepLabel& label : list_irreps(n)) table.entries.emplace_back(label, multiplicity(n, m, label));
  return table;
}

std::vector<MultiplicityTable> decompose_table(int n, std::int64_t m_min, std::int64_t m_max) {
  if (n < 4) throw std::invalid_argument("decompose_table requires n >= 4");
  if (m_min < 0 || m_min > m_max) throw std::invalid_argument("invalid m range");
  std::vector<MultiplicityTable> out;
  for (std::int64_t m = m_min; m <= m_max; ++m) out.push_back(decompose(n, m));
  return out;
}

namespace {

std::int64_t inner_product(int n, const std::vector<GroupElement>& elements, const std::vector<Cyclo>& chi_v,
                           const IrrepLabel& label) {
  Cyclo total(n);
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    total += chi_v[idx] * irrep_character(n, label, elements[idx]).conj();
  }
  const auto value = total.as_integer();
  if (!value) throw std::logic_error("character inner product is not rational: " + total.to_string());
  const Integer order = static_cast<long>(elements.size());
  if (*value % order != 0) {
    throw std::logic_error("character inner product " + value->get_str() + " not divisible by |G| = " + order.get_str());
  }
  return to_int64(*value / order);
}

void check_oracle_range(int n, std::int64_t m, int oracle_bound) {
  if (n < 4) throw std::invalid_argument("oracle requires n >= 4");
  if (n > oracle_bound) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the oracle bound " + std::to_string(oracle_bound));
  }
  if (m < 1) throw std::invalid_argument("oracle requires m >= 1");
}

std::vector<Cyclo> character_values(int n, std::int64_t m, const std::vector<GroupElement>& elements) {
  std::vector<Cyclo> chi_v;
  chi_v.reserve(elements.size());
  for (const auto& g : elements) chi_v.push_back(char_Vm({n, m}, g));
  return chi_v;
}

}  // namespace

unsigned oracle_threads_from_env() {
  const char* raw = std::getenv("FERMAT_REPS_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0') return 0;
  return static_cast<unsigned>(std::min<unsigned long>(value, 1024));
}

std::int64_t multiplicity_oracle(int n, std::int64_t m, const IrrepLabel& label, int oracle_bound) {
  check_oracle_range(n, m, oracle_bound);
  const auto elements = FermatGroup(n).elements();
  return inner_product(n, elements, character_values(n, m, elements), label);
}

std::vector<std::pair<IrrepLabel, std::int64_t>> oracle_decompose(int n, std::int64_t m, unsigned threads,
                                                                  int oracle_bound) {
  check_oracle_range(n, m, oracle_bound);
  const auto elements = FermatGroup(n).elements();
  const auto chi_v = character_values(n, m, elements);
  const auto labels = list_irreps(n);

  std::vector<std::pair<IrrepLabel, std::int64_t>> out(labels.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(labels.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < labels.size(); idx = next++) {
      try {
        out[idx] = {labels[idx], inner_product(n, elements, chi_v, labels[idx])};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace fermat
