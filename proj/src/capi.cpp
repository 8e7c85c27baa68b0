#include "sphereloop/sphereloop.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sphereloop/campaign.hpp"
#include "sphereloop/error.hpp"
#include "sphereloop/orth_group.hpp"

using namespace sphereloop;

struct sl_context {
  Tolerances tol;
};

struct sl_point {
  SpherePoint p;
};

struct sl_operator {
  Operator a;
};

struct sl_magma {
  FiniteMagma m;
};

namespace {

thread_local std::string g_last_error;

sl_status fail(sl_status s, const char* msg) {
  try {
    g_last_error = msg;
  } catch (...) {
  }
  return s;
}

template <class F>
sl_status guard(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return SL_OK;
  } catch (const Error& e) {
    return fail(static_cast<sl_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SL_ERR_INTERNAL, "unknown error");
  }
}

const Tolerances& tols(const sl_context* ctx) {
  static const Tolerances defaults;
  return ctx ? ctx->tol : defaults;
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) raise(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(sl_point** out, SpherePoint p) {
  need(out, "output handle");
  *out = new sl_point{std::move(p)};
}

}  // namespace

extern "C" {

const char* sl_version(void) { return kLibraryVersion; }

const char* sl_last_error(void) { return g_last_error.c_str(); }

const char* sl_status_name(sl_status status) {
  switch (status) {
    case SL_OK: return "ok";
    case SL_ERR_DIMENSION: return "dimension";
    case SL_ERR_DEGENERATE: return "degenerate";
    case SL_ERR_DOMAIN: return "domain";
    case SL_ERR_PRECONDITION: return "precondition";
    case SL_ERR_STRUCTURAL: return "structural";
    case SL_ERR_GENERATOR: return "generator";
    case SL_ERR_PARSE: return "parse";
    case SL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void sl_string_free(char* s) { std::free(s); }

sl_status sl_context_create(sl_context** out) {
  return guard([&] {
    need(out, "output handle");
    *out = new sl_context{};
  });
}

void sl_context_destroy(sl_context* ctx) { delete ctx; }

sl_status sl_context_set_tolerances(sl_context* ctx, double eps_unit, double eps_pole, double eps_op, double eps_res) {
  return guard([&] {
    need(ctx, "context");
    const Tolerances t{eps_unit, eps_pole, eps_op, eps_res};
    t.validate();
    ctx->tol = t;
  });
}

sl_status sl_context_get_tolerances(const sl_context* ctx, double out[4]) {
  return guard([&] {
    need(out, "output array");
    const Tolerances& t = tols(ctx);
    out[0] = t.eps_unit;
    out[1] = t.eps_pole;
    out[2] = t.eps_op;
    out[3] = t.eps_res;
  });
}

// ---------------------------------------------------------------------------

sl_status sl_point_create(const sl_context* ctx, const double* coords, size_t dim, sl_point** out) {
  return guard([&] {
    need(coords, "coordinates");
    emit(out, SpherePoint(HVector(std::vector<double>(coords, coords + dim)), tols(ctx)));
  });
}

sl_status sl_point_e0(size_t dim, sl_point** out) { return guard([&] { emit(out, SpherePoint::e0(dim)); }); }

sl_status sl_point_minus_e0(size_t dim, sl_point** out) {
  return guard([&] { emit(out, SpherePoint::minus_e0(dim)); });
}

void sl_point_destroy(sl_point* p) { delete p; }

size_t sl_point_dim(const sl_point* p) { return p ? p->p.dim() : 0; }

sl_status sl_point_coords(const sl_point* p, double* out, size_t capacity) {
  return guard([&] {
    need(p, "point");
    need(out, "output buffer");
    if (capacity < p->p.dim()) raise(ErrorCode::InvalidArgument, "output buffer too small");
    for (size_t i = 0; i < p->p.dim(); ++i) out[i] = p->p[i];
  });
}

sl_status sl_point_pole(const sl_point* p, sl_pole* out) {
  return guard([&] {
    need(p, "point");
    need(out, "output");
    switch (p->p.pole()) {
      case PoleClass::IdentityPt: *out = SL_POLE_IDENTITY; break;
      case PoleClass::Antipode: *out = SL_POLE_ANTIPODE; break;
      case PoleClass::Generic: *out = SL_POLE_GENERIC; break;
    }
  });
}

// ---------------------------------------------------------------------------

#define SL_BINARY(fn, impl)                                                                  \
  sl_status fn(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_point** out) { \
    return guard([&] {                                                                       \
      need(x, "x");                                                                          \
      need(y, "y");                                                                          \
      emit(out, impl(x->p, y->p, tols(ctx)));                                                \
    });                                                                                      \
  }

SL_BINARY(sl_odot, odot)
SL_BINARY(sl_odot_alt, odot_alt)
SL_BINARY(sl_symm, symm)

#undef SL_BINARY

sl_status sl_inverse(const sl_context* ctx, const sl_point* x, sl_point** out) {
  return guard([&] {
    need(x, "x");
    emit(out, inverse(x->p, tols(ctx)));
  });
}

sl_status sl_sqrt(const sl_context* ctx, const sl_point* x, sl_point** out) {
  return guard([&] {
    need(x, "x");
    emit(out, sqrt_point(x->p, tols(ctx)));
  });
}

sl_status sl_power(const sl_context* ctx, const sl_point* x, double t, sl_point** out) {
  return guard([&] {
    need(x, "x");
    emit(out, power(x->p, t, tols(ctx)));
  });
}

sl_status sl_norm_s(const sl_point* x, double* out) {
  return guard([&] {
    need(x, "x");
    need(out, "output");
    *out = norm_s(x->p);
  });
}

sl_status sl_dist_s(const sl_point* x, const sl_point* y, double* out) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(out, "output");
    *out = dist_s(x->p, y->p);
  });
}

sl_status sl_line_gamma(const sl_context* ctx, const sl_point* x, const sl_point* y, double t, sl_point** out) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    emit(out, line_gamma(x->p, y->p, t, tols(ctx)));
  });
}

sl_status sl_equi_eta(const sl_context* ctx, const sl_point* x, const sl_point* y, double t, sl_point** eta,
                      sl_point** nu) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(eta, "eta handle");
    need(nu, "nu handle");
    EquiPoint e = equi_eta(x->p, y->p, t, tols(ctx));
    auto* a = new sl_point{std::move(e.eta)};
    try {
      *nu = new sl_point{std::move(e.nu)};
    } catch (...) {
      delete a;
      throw;
    }
    *eta = a;
  });
}

sl_status sl_solutions(const sl_context* ctx, const sl_point* a, int* dimension, sl_point** first,
                       sl_point** second) {
  return guard([&] {
    need(a, "a");
    need(dimension, "dimension output");
    need(first, "first handle");
    need(second, "second handle");
    SolutionDimension sd = count_solution_dimension(a->p, tols(ctx));
    auto* f = new sl_point{sd.witnesses.front()};
    sl_point* s = nullptr;
    if (sd.witnesses.size() > 1) {
      try {
        s = new sl_point{sd.witnesses[1]};
      } catch (...) {
        delete f;
        throw;
      }
    }
    *dimension = sd.dimension;
    *first = f;
    *second = s;
  });
}

// ---------------------------------------------------------------------------

sl_status sl_operator_create(const double* row_major, size_t dim, sl_operator** out) {
  return guard([&] {
    need(row_major, "entries");
    need(out, "output handle");
    *out = new sl_operator{Operator(dim, std::vector<double>(row_major, row_major + dim * dim))};
  });
}

void sl_operator_destroy(sl_operator* A) { delete A; }

size_t sl_operator_dim(const sl_operator* A) { return A ? A->a.dim() : 0; }

sl_status sl_operator_entries(const sl_operator* A, double* out, size_t capacity) {
  return guard([&] {
    need(A, "operator");
    need(out, "output buffer");
    const auto e = A->a.row_major();
    if (capacity < e.size()) raise(ErrorCode::InvalidArgument, "output buffer too small");
    std::copy(e.begin(), e.end(), out);
  });
}

sl_status sl_left_translation(const sl_context* ctx, const sl_point* x, sl_operator** out) {
  return guard([&] {
    need(x, "x");
    need(out, "output handle");
    *out = new sl_operator{left_translation(x->p, tols(ctx))};
  });
}

sl_status sl_left_inner(const sl_context* ctx, const sl_point* x, const sl_point* y, sl_operator** out) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(out, "output handle");
    *out = new sl_operator{left_inner(x->p, y->p, tols(ctx))};
  });
}

sl_status sl_factorize(const sl_context* ctx, const sl_operator* A, sl_point** u, sl_operator** U) {
  return guard([&] {
    need(A, "operator");
    need(u, "u handle");
    need(U, "U handle");
    Factorization f = factorize(A->a, tols(ctx));
    auto* pu = new sl_point{std::move(f.u)};
    try {
      *U = new sl_operator{std::move(f.U)};
    } catch (...) {
      delete pu;
      throw;
    }
    *u = pu;
  });
}

// ---------------------------------------------------------------------------

sl_status sl_magma_zn_reflection(int n, sl_magma** out) {
  return guard([&] {
    need(out, "output handle");
    *out = new sl_magma{zn_reflection(n)};
  });
}

sl_status sl_magma_parse(const char* text, sl_magma** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output handle");
    *out = new sl_magma{FiniteMagma::parse(text)};
  });
}

void sl_magma_destroy(sl_magma* m) { delete m; }

int sl_magma_size(const sl_magma* m) { return m ? m->m.size() : 0; }

sl_status sl_magma_to_text(const sl_magma* m, char** out) {
  return guard([&] {
    need(m, "magma");
    need(out, "output");
    *out = dup_string(m->m.to_text());
  });
}

sl_status sl_magma_isotopy(const sl_magma* m, int e, sl_magma** out) {
  return guard([&] {
    need(m, "magma");
    need(out, "output handle");
    *out = new sl_magma{quasigroup_to_bloop(m->m, e)};
  });
}

sl_status sl_magma_reflection_report(const sl_magma* m, char** text, int* all_hold) {
  return guard([&] {
    need(m, "magma");
    need(text, "output");
    need(all_hold, "output");
    const AxiomReport r = check_reflection_axioms(m->m);
    *text = dup_string(axiom_report_text(r));
    *all_hold = r.all_hold() ? 1 : 0;
  });
}

sl_status sl_magma_bloop_report(const sl_magma* m, char** text, int* all_hold) {
  return guard([&] {
    need(m, "magma");
    need(text, "output");
    need(all_hold, "output");
    const AxiomReport r = check_bloop_laws(m->m);
    *text = dup_string(axiom_report_text(r));
    *all_hold = r.all_hold() ? 1 : 0;
  });
}

// ---------------------------------------------------------------------------

sl_status sl_verify(const char* config_json, char** report_json, int* overall_pass) {
  return guard([&] {
    need(config_json, "config");
    need(report_json, "output");
    need(overall_pass, "output");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::InvalidArgument, std::string("verify config is not valid JSON: ") + e.what());
    }
    const VerifyResult r = run_verify(VerifyConfig::from_json(j));
    *report_json = dup_string(dump_report(r.document));
    *overall_pass = r.pass ? 1 : 0;
  });
}

sl_status sl_curve_csv(const sl_context* ctx, sl_curve_kind kind, const sl_point* x, const sl_point* y, double t0,
                       double t1, int steps, char** csv) {
  return guard([&] {
    need(x, "x");
    need(y, "y");
    need(csv, "output");
    CurveKind k;
    switch (kind) {
      case SL_CURVE_LINE: k = CurveKind::Line; break;
      case SL_CURVE_EQUI: k = CurveKind::Equidistant; break;
      default: raise(ErrorCode::InvalidArgument, "unknown curve kind");
    }
    *csv = dup_string(curve_csv(k, x->p, y->p, linear_grid(t0, t1, steps), tols(ctx)));
  });
}

sl_status sl_factorize_json(const sl_context* ctx, const char* matrix_json, char** out_json, double* residual) {
  return guard([&] {
    need(matrix_json, "matrix");
    need(out_json, "output");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(matrix_json);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::Parse, std::string("matrix is not valid JSON: ") + e.what());
    }
    const nlohmann::json out = factorize_json(operator_from_json(j), tols(ctx));
    *out_json = dup_string(out.dump(2) + "\n");
    if (residual) *residual = out["residual"].get<double>();
  });
}

}  // extern "C"
