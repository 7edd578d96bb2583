#include "zprmod.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/duality.hpp"
#include "core/error.hpp"
#include "core/module.hpp"
#include "core/module_io.hpp"
#include "core/oracle.hpp"
#include "core/pbasis.hpp"

struct zpr_ring {
  zprmod::Ring impl;
};

struct zpr_module {
  zprmod::Module impl;
};

struct zpr_pbasis {
  zprmod::PBasis impl;
};

struct zpr_vecset {
  zprmod::Ring ring;
  std::size_t n;
  std::vector<zprmod::Vec> elements;
};

namespace {

thread_local std::string g_last_error;

zpr_status map_errc(zprmod::errc code) {
  using zprmod::errc;
  switch (code) {
    case errc::not_prime: return ZPR_ERR_NOT_PRIME;
    case errc::bad_exponent: return ZPR_ERR_BAD_EXPONENT;
    case errc::overflow: return ZPR_ERR_OVERFLOW;
    case errc::not_a_unit: return ZPR_ERR_NOT_A_UNIT;
    case errc::dimension_mismatch: return ZPR_ERR_DIMENSION_MISMATCH;
    case errc::too_large: return ZPR_ERR_TOO_LARGE;
    case errc::not_a_submodule: return ZPR_ERR_NOT_A_SUBMODULE;
    case errc::parse_error: return ZPR_ERR_PARSE;
    case errc::bad_argument: return ZPR_ERR_BAD_ARGUMENT;
    case errc::internal: return ZPR_ERR_INTERNAL;
  }
  return ZPR_ERR_INTERNAL;
}

zpr_status fail_status(zpr_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename F>
zpr_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ZPR_OK;
  } catch (const zprmod::error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ZPR_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZPR_ERR_INTERNAL;
  }
}

std::vector<zprmod::Vec> to_vectors(const zprmod::Ring& ring, std::size_t n,
                                    const long long* data, std::size_t count) {
  if (n == 0) zprmod::fail(zprmod::errc::bad_argument, "ambient length must be at least 1");
  if (count > 0 && data == nullptr)
    zprmod::fail(zprmod::errc::bad_argument, "null vector data");
  std::vector<zprmod::Vec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> coords(data + i * n, data + (i + 1) * n);
    out.emplace_back(ring, std::move(coords));
  }
  return out;
}

zprmod::Vec to_vector(const zprmod::Ring& ring, std::size_t n, const long long* v) {
  if (v == nullptr) zprmod::fail(zprmod::errc::bad_argument, "null vector");
  return zprmod::Vec(ring, std::vector<std::int64_t>(v, v + n));
}

std::size_t effective_guard(std::size_t max_states) {
  return max_states == 0 ? zprmod::kDefaultMaxStates : max_states;
}

zpr_vecset* make_vecset(const zprmod::Ring& ring, std::size_t n,
                        std::vector<zprmod::Vec> elements) {
  return new zpr_vecset{ring, n, std::move(elements)};
}

}  // namespace

const char* zpr_status_name(zpr_status status) {
  switch (status) {
    case ZPR_OK: return "ok";
    case ZPR_ERR_NOT_PRIME: return "not_prime";
    case ZPR_ERR_BAD_EXPONENT: return "bad_exponent";
    case ZPR_ERR_OVERFLOW: return "overflow";
    case ZPR_ERR_NOT_A_UNIT: return "not_a_unit";
    case ZPR_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case ZPR_ERR_TOO_LARGE: return "too_large";
    case ZPR_ERR_NOT_A_SUBMODULE: return "not_a_submodule";
    case ZPR_ERR_PARSE: return "parse_error";
    case ZPR_ERR_BAD_ARGUMENT: return "bad_argument";
    case ZPR_ERR_NOMEM: return "out_of_memory";
    case ZPR_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* zpr_last_error_message(void) { return g_last_error.c_str(); }

/* ---------------------------------------------------------------- ring -- */

zpr_status zpr_ring_new(long long p, long long r, zpr_ring** out) {
  if (!out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new zpr_ring{zprmod::Ring(p, r)}; });
}

void zpr_ring_free(zpr_ring* ring) { delete ring; }

long long zpr_ring_prime(const zpr_ring* ring) { return ring->impl.prime(); }
long long zpr_ring_exponent(const zpr_ring* ring) { return ring->impl.exponent(); }
long long zpr_ring_modulus(const zpr_ring* ring) { return ring->impl.modulus(); }

long long zpr_reduce(const zpr_ring* ring, long long a) {
  return ring->impl.reduce(a);
}

zpr_status zpr_padic_digits(const zpr_ring* ring, long long a, long long* digits,
                            size_t count) {
  if (!ring || !digits) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    if (count != static_cast<size_t>(ring->impl.exponent()))
      zprmod::fail(zprmod::errc::bad_argument, "digit buffer must have length r");
    auto d = ring->impl.padic_digits(a);
    std::copy(d.begin(), d.end(), digits);
  });
}

zpr_status zpr_compose_digits(const zpr_ring* ring, const long long* digits,
                              size_t count, long long* out) {
  if (!ring || !digits || !out)
    return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::int64_t> d(digits, digits + count);
    *out = ring->impl.compose_digits(d);
  });
}

long long zpr_valuation(const zpr_ring* ring, long long a) {
  return ring->impl.valuation(ring->impl.reduce(a));
}

zpr_status zpr_unit_inverse(const zpr_ring* ring, long long a, long long* out) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = ring->impl.unit_inverse(a); });
}

/* ---------------------------------------------------------- submodules -- */

zpr_status zpr_module_from_generators(const zpr_ring* ring, size_t n,
                                      const long long* rows, size_t row_count,
                                      zpr_module** out) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto gens = to_vectors(ring->impl, n, rows, row_count);
    *out = new zpr_module{zprmod::Module::from_generators(ring->impl, n, gens)};
  });
}

zpr_status zpr_module_parse(const char* text, zpr_module** out) {
  if (!text || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto parsed = zprmod::parse_module_text(text);
    *out = new zpr_module{
        zprmod::Module::from_generators(parsed.ring, parsed.n, parsed.generators)};
  });
}

zpr_status zpr_module_format(const zpr_module* m, char** out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text = zprmod::format_module_file(m->impl);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void zpr_string_free(char* s) { delete[] s; }

void zpr_module_free(zpr_module* m) { delete m; }

long long zpr_module_prime(const zpr_module* m) { return m->impl.ring().prime(); }
long long zpr_module_exponent(const zpr_module* m) {
  return m->impl.ring().exponent();
}
size_t zpr_module_length(const zpr_module* m) { return m->impl.length(); }
size_t zpr_module_row_count(const zpr_module* m) {
  return m->impl.standard_form().row_count();
}
long long zpr_module_pdim(const zpr_module* m) { return m->impl.p_dimension(); }

zpr_status zpr_module_cardinality(const zpr_module* m, unsigned long long* out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = m->impl.cardinality(); });
}

zpr_status zpr_module_block_counts(const zpr_module* m, long long* counts,
                                   size_t count) {
  if (!m || !counts) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& k = m->impl.standard_form().block_counts();
    if (count != k.size())
      zprmod::fail(zprmod::errc::bad_argument, "block count buffer must have length r");
    std::copy(k.begin(), k.end(), counts);
  });
}

namespace {

zpr_status copy_rows(const std::vector<zprmod::Vec>& rows, std::size_t n,
                     long long* out, size_t capacity) {
  return guarded([&] {
    if (!out && !rows.empty())
      zprmod::fail(zprmod::errc::bad_argument, "null row buffer");
    if (capacity < rows.size() * n)
      zprmod::fail(zprmod::errc::bad_argument, "row buffer too small");
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = rows[i][j];
  });
}

}  // namespace

zpr_status zpr_module_generator_rows(const zpr_module* m, long long* rows,
                                     size_t capacity) {
  if (!m) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null module");
  return copy_rows(m->impl.standard_form().rows(), m->impl.length(), rows, capacity);
}

zpr_status zpr_module_standard_rows(const zpr_module* m, long long* rows,
                                    size_t capacity) {
  if (!m) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null module");
  return copy_rows(m->impl.standard_form().rows_permuted(), m->impl.length(), rows,
                   capacity);
}

zpr_status zpr_module_permutation(const zpr_module* m, long long* perm,
                                  size_t count) {
  if (!m || !perm) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& p = m->impl.standard_form().permutation();
    if (count != p.size())
      zprmod::fail(zprmod::errc::bad_argument, "permutation buffer must have length n");
    for (std::size_t i = 0; i < p.size(); ++i)
      perm[i] = static_cast<long long>(p[i]);
  });
}

zpr_status zpr_module_membership(const zpr_module* m, const long long* v,
                                 int* member, long long* coeffs) {
  if (!m || !member) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = m->impl.membership(to_vector(m->impl.ring(), m->impl.length(), v));
    *member = result.member ? 1 : 0;
    if (result.member && coeffs)
      std::copy(result.coeffs.begin(), result.coeffs.end(), coeffs);
  });
}

zpr_status zpr_module_equal(const zpr_module* a, const zpr_module* b, int* equal) {
  if (!a || !b || !equal) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *equal = a->impl.equals(b->impl) ? 1 : 0; });
}

zpr_status zpr_module_dual(const zpr_module* m, zpr_module** out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = new zpr_module{zprmod::dual(m->impl)}; });
}

zpr_status zpr_module_socle(const zpr_module* m, zpr_module** out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = new zpr_module{zprmod::socle(m->impl)}; });
}

zpr_status zpr_module_sum(const zpr_module* a, const zpr_module* b,
                          zpr_module** out) {
  if (!a || !b || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = new zpr_module{zprmod::sum(a->impl, b->impl)}; });
}

zpr_status zpr_module_intersect(const zpr_module* a, const zpr_module* b,
                                zpr_module** out) {
  if (!a || !b || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = new zpr_module{zprmod::intersect(a->impl, b->impl)}; });
}

zpr_status zpr_module_enumerate(const zpr_module* m, size_t max_states,
                                zpr_vecset** out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto elems = zprmod::oracle::enumerate_span(
        m->impl.ring(), m->impl.length(), m->impl.standard_form().rows(),
        {effective_guard(max_states)});
    *out = make_vecset(m->impl.ring(), m->impl.length(), std::move(elems));
  });
}

zpr_status zpr_module_verify_identities(const zpr_module* m,
                                        zpr_verify_report* out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto report = zprmod::verify_dimension_identities(m->impl);
    out->pdim = report.pdim;
    out->pdim_dual = report.pdim_dual;
    out->ambient_pdim = report.ambient_pdim;
    out->dim_identity_ok = report.dim_identity_ok ? 1 : 0;
    out->cardinality_identity_ok = report.cardinality_identity_ok ? 1 : 0;
    out->dual_parameters_ok = report.dual_parameters_ok ? 1 : 0;
    out->all_ok = report.all_ok() ? 1 : 0;
  });
}

/* ------------------------------------------------------------- p-bases -- */

zpr_status zpr_pbasis_from_module(const zpr_module* m, zpr_pbasis** out) {
  if (!m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] { *out = new zpr_pbasis{zprmod::PBasis::from_module(m->impl)}; });
}

zpr_status zpr_pbasis_new(const zpr_ring* ring, size_t n,
                          const long long* vectors, size_t count,
                          zpr_pbasis** out) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new zpr_pbasis{
        zprmod::PBasis::checked(ring->impl, n, to_vectors(ring->impl, n, vectors, count))};
  });
}

void zpr_pbasis_free(zpr_pbasis* b) { delete b; }

size_t zpr_pbasis_dim(const zpr_pbasis* b) { return b->impl.pdim(); }
size_t zpr_pbasis_length(const zpr_pbasis* b) { return b->impl.length(); }

zpr_status zpr_pbasis_vectors(const zpr_pbasis* b, long long* vectors,
                              size_t capacity) {
  if (!b) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null basis");
  return copy_rows(b->impl.vectors(), b->impl.length(), vectors, capacity);
}

zpr_status zpr_pbasis_coordinates(const zpr_pbasis* b, const long long* v,
                                  int* member, long long* digits) {
  if (!b || !member) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto coords =
        b->impl.coordinates(to_vector(b->impl.ring(), b->impl.length(), v));
    *member = coords.member ? 1 : 0;
    if (coords.member && digits)
      std::copy(coords.digits.begin(), coords.digits.end(), digits);
  });
}

zpr_status zpr_pbasis_extend(const zpr_pbasis* sub, const zpr_module* m,
                             zpr_pbasis** out) {
  if (!sub || !m || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new zpr_pbasis{zprmod::extend_p_basis(sub->impl, m->impl)};
  });
}

zpr_status zpr_check_p_generator_sequence(const zpr_ring* ring, size_t n,
                                          const long long* vectors, size_t count,
                                          size_t max_states, int* ok,
                                          size_t* first_violation) {
  if (!ring || !ok) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = zprmod::is_p_generator_sequence(
        ring->impl, n, to_vectors(ring->impl, n, vectors, count),
        effective_guard(max_states));
    *ok = result.ok ? 1 : 0;
    if (!result.ok && first_violation) *first_violation = *result.first_violation;
  });
}

zpr_status zpr_check_p_independent(const zpr_ring* ring, size_t n,
                                   const long long* vectors, size_t count,
                                   size_t max_states, int* independent,
                                   long long* witness, int* witness_set) {
  if (!ring || !independent)
    return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = zprmod::is_p_independent(
        ring->impl, n, to_vectors(ring->impl, n, vectors, count),
        effective_guard(max_states));
    *independent = result.independent ? 1 : 0;
    bool filled = false;
    if (!result.independent && result.witness && witness) {
      std::copy(result.witness->begin(), result.witness->end(), witness);
      filled = true;
    }
    if (witness_set) *witness_set = filled ? 1 : 0;
  });
}

/* -------------------------------------------------- brute-force oracle -- */

zpr_status zpr_enumerate_span(const zpr_ring* ring, size_t n,
                              const long long* rows, size_t row_count,
                              size_t max_states, zpr_vecset** out) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto elems = zprmod::oracle::enumerate_span(
        ring->impl, n, to_vectors(ring->impl, n, rows, row_count),
        {effective_guard(max_states)});
    *out = make_vecset(ring->impl, n, std::move(elems));
  });
}

zpr_status zpr_enumerate_p_span(const zpr_ring* ring, size_t n,
                                const long long* vectors, size_t count,
                                size_t max_states, zpr_vecset** out,
                                int* collision) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = zprmod::oracle::enumerate_p_span(
        ring->impl, n, to_vectors(ring->impl, n, vectors, count),
        {effective_guard(max_states)});
    if (collision) *collision = result.collision ? 1 : 0;
    *out = make_vecset(ring->impl, n, std::move(result.elements));
  });
}

zpr_status zpr_brute_dual(const zpr_ring* ring, size_t n,
                          const long long* elements, size_t element_count,
                          size_t max_states, zpr_vecset** out) {
  if (!ring || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto elems = zprmod::oracle::brute_dual(
        ring->impl, n, to_vectors(ring->impl, n, elements, element_count),
        {effective_guard(max_states)});
    *out = make_vecset(ring->impl, n, std::move(elems));
  });
}

zpr_status zpr_brute_p_independent(const zpr_ring* ring, size_t n,
                                   const long long* vectors, size_t count,
                                   size_t max_states, int* independent,
                                   long long* witness, int* witness_set) {
  if (!ring || !independent)
    return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    auto result = zprmod::oracle::brute_p_independent(
        ring->impl, n, to_vectors(ring->impl, n, vectors, count),
        {effective_guard(max_states)});
    *independent = result.independent ? 1 : 0;
    bool filled = false;
    if (!result.independent && result.witness && witness) {
      std::copy(result.witness->begin(), result.witness->end(), witness);
      filled = true;
    }
    if (witness_set) *witness_set = filled ? 1 : 0;
  });
}

void zpr_vecset_free(zpr_vecset* s) { delete s; }

size_t zpr_vecset_size(const zpr_vecset* s) { return s->elements.size(); }
size_t zpr_vecset_length(const zpr_vecset* s) { return s->n; }

zpr_status zpr_vecset_row(const zpr_vecset* s, size_t index, long long* out) {
  if (!s || !out) return fail_status(ZPR_ERR_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    if (index >= s->elements.size())
      zprmod::fail(zprmod::errc::bad_argument, "vector index out of range");
    for (std::size_t i = 0; i < s->n; ++i) out[i] = s->elements[index][i];
  });
}
