#include "qgeo/qgeo.h"

#include <limits>
#include <new>
#include <optional>
#include <string>
#include <type_traits>

#include "qgeo/commands.hpp"
#include "qgeo/constraints.hpp"
#include "qgeo/spectral.hpp"
#include "qgeo/su2sim.hpp"

struct qgeo_document {
  qgeo::Document doc;
  std::string rendered;
};

struct qgeo_hamiltonian {
  qgeo::Hamiltonian h;
};

namespace {

thread_local std::string g_last_error;

qgeo_status status_for(qgeo::ErrorKind kind) {
  using qgeo::ErrorKind;
  switch (kind) {
    case ErrorKind::NumericalCheck:
    case ErrorKind::StepTooLarge:
    case ErrorKind::NoProgress: return QGEO_ERR_NUMERICAL;
    case ErrorKind::Io: return QGEO_ERR_IO;
    default: return QGEO_ERR_INVALID;
  }
}

template <class F>
qgeo_status guarded(F&& body) noexcept {
  try {
    body();
    return QGEO_OK;
  } catch (const qgeo::Error& e) {
    g_last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QGEO_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QGEO_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QGEO_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) qgeo::fail(qgeo::ErrorKind::InvalidArgument, std::string(name) + " is null");
}

qgeo_status emit(qgeo_document** out, const auto& make) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new qgeo_document{make(), {}};
  });
}

qgeo::StateVector read_state(const double* v, size_t dim, const char* name) {
  require(v, name);
  qgeo::CVector c(static_cast<Eigen::Index>(dim));
  for (size_t i = 0; i < dim; ++i) c(static_cast<Eigen::Index>(i)) = {v[2 * i], v[2 * i + 1]};
  return qgeo::StateVector::normalized(c);
}

void write_vector(const qgeo::CVector& c, double* out) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    out[2 * i] = c(i).real();
    out[2 * i + 1] = c(i).imag();
  }
}

qgeo_status make_handle(qgeo_hamiltonian** out, const auto& make) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new qgeo_hamiltonian{make()};
  });
}

}  // namespace

extern "C" {

const char* qgeo_version(void) { return "1.0.0"; }
const char* qgeo_last_error(void) { return g_last_error.c_str(); }

qgeo_status qgeo_cmd_fig2(double omega0, double nu0, int steps, qgeo_document** out) {
  return emit(out, [&] { return qgeo::cmd_fig2(omega0, nu0, steps); });
}

qgeo_status qgeo_cmd_fig3(const char* case_name, int grid, qgeo_document** out) {
  return emit(out, [&] {
    require(case_name, "case_name");
    return qgeo::cmd_fig3(qgeo::parse_gap_case(case_name), grid);
  });
}

qgeo_status qgeo_cmd_scaling(int k_max, qgeo_document** out) {
  return emit(out, [&] { return qgeo::cmd_scaling(k_max); });
}

qgeo_status qgeo_cmd_table1(const char* const* scenarios, size_t count, qgeo_document** out) {
  return emit(out, [&] {
    std::vector<qgeo::TransportScenario> list;
    if (count > 0) require(scenarios, "scenarios");
    for (size_t i = 0; i < count; ++i) {
      require(scenarios[i], "scenario");
      list.push_back(qgeo::parse_scenario(scenarios[i]));
    }
    return qgeo::cmd_table1(list);
  });
}

qgeo_status qgeo_cmd_table2(qgeo_document** out) {
  return emit(out, [] { return qgeo::cmd_table2(); });
}

qgeo_status qgeo_cmd_coupling_fix(const double* gammas, size_t count, qgeo_document** out) {
  return emit(out, [&] {
    if (count > 0) require(gammas, "gammas");
    return qgeo::cmd_coupling_fix(std::vector<double>(gammas, gammas + count));
  });
}

qgeo_status qgeo_cmd_constraint_scan(int grid, qgeo_document** out) {
  return emit(out, [&] { return qgeo::cmd_constraint_scan(grid); });
}

qgeo_status qgeo_cmd_grover_check(const int64_t* sizes, size_t count, qgeo_document** out) {
  return emit(out, [&] {
    if (count > 0) require(sizes, "sizes");
    return qgeo::cmd_grover_check(std::vector<std::int64_t>(sizes, sizes + count));
  });
}

qgeo_status qgeo_document_set_param(qgeo_document* doc, const char* key, const char* value) {
  return guarded([&] {
    require(doc, "doc");
    require(key, "key");
    require(value, "value");
    for (auto& [k, v] : doc->doc.params) {
      if (k == key) {
        v = std::string(value);
        return;
      }
    }
    doc->doc.params.emplace_back(key, std::string(value));
  });
}

qgeo_status qgeo_document_render(qgeo_document* doc, qgeo_format format, const char** text) {
  return guarded([&] {
    require(doc, "doc");
    require(text, "text");
    if (format == QGEO_FORMAT_CSV) {
      doc->rendered = qgeo::to_csv(doc->doc);
    } else if (format == QGEO_FORMAT_JSON) {
      doc->rendered = qgeo::to_json(doc->doc);
    } else {
      qgeo::fail(qgeo::ErrorKind::InvalidArgument, "unknown format");
    }
    *text = doc->rendered.c_str();
  });
}

qgeo_status qgeo_document_write(qgeo_document* doc, qgeo_format format, const char* path) {
  const char* text = nullptr;
  if (const qgeo_status st = qgeo_document_render(doc, format, &text); st != QGEO_OK) return st;
  return guarded([&] {
    require(path, "path");
    qgeo::write_text(path, doc->rendered);
  });
}

size_t qgeo_document_row_count(const qgeo_document* doc) { return doc ? doc->doc.rows.size() : 0; }

void qgeo_document_free(qgeo_document* doc) { delete doc; }

qgeo_status qgeo_hamiltonian_fg(const double* source, const double* target, size_t dim, double energy,
                                qgeo_hamiltonian** out) {
  return make_handle(out, [&] {
    const qgeo::SearchProblem p(read_state(source, dim, "source"), read_state(target, dim, "target"), energy);
    return qgeo::Hamiltonian{qgeo::build_fg(p)};
  });
}

qgeo_status qgeo_hamiltonian_fenner(const double* source, const double* target, size_t dim, double energy,
                                    qgeo_hamiltonian** out) {
  return make_handle(out, [&] {
    const qgeo::SearchProblem p(read_state(source, dim, "source"), read_state(target, dim, "target"), energy);
    return qgeo::Hamiltonian{qgeo::build_fenner(p)};
  });
}

qgeo_status qgeo_hamiltonian_opt(const double* a, const double* b, size_t dim, double dispersion,
                                 qgeo_hamiltonian** out) {
  return make_handle(out, [&] {
    return qgeo::Hamiltonian{qgeo::build_opt(read_state(a, dim, "a"), read_state(b, dim, "b"), dispersion)};
  });
}

qgeo_status qgeo_hamiltonian_uzdin(double omega0, double nu0, qgeo_hamiltonian** out) {
  return make_handle(out, [&] { return qgeo::Hamiltonian{qgeo::build_uzdin(omega0, nu0)}; });
}

qgeo_status qgeo_hamiltonian_coupled_schedule(double gamma, qgeo_hamiltonian** out) {
  return make_handle(out, [&] { return qgeo::Hamiltonian{qgeo::coupled_schedule(gamma)}; });
}

size_t qgeo_hamiltonian_dim(const qgeo_hamiltonian* h) {
  if (h == nullptr) return 0;
  size_t dim = 0;
  const qgeo_status st = guarded([&] {
    dim = std::visit([](const auto& g) -> size_t {
      if constexpr (std::is_same_v<std::decay_t<decltype(g)>, qgeo::StationaryHamiltonian>)
        return g.matrix.dim();
      else
        return g.dim();
    }, h->h);
  });
  return st == QGEO_OK ? dim : 0;
}

qgeo_status qgeo_hamiltonian_domain(const qgeo_hamiltonian* h, double* t0, double* t1) {
  return guarded([&] {
    require(h, "h");
    require(t0, "t0");
    require(t1, "t1");
    if (const auto* td = std::get_if<qgeo::TimeDependentHamiltonian>(&h->h)) {
      *t0 = td->t0;
      *t1 = td->t1;
    } else {
      *t0 = 0.0;
      *t1 = std::numeric_limits<double>::infinity();
    }
  });
}

qgeo_status qgeo_hamiltonian_matrix(const qgeo_hamiltonian* h, double t, double* out) {
  return guarded([&] {
    require(h, "h");
    require(out, "out");
    const qgeo::CMatrix m = qgeo::sample(h->h, t).matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out[2 * (r * m.cols() + c)] = m(r, c).real();
        out[2 * (r * m.cols() + c) + 1] = m(r, c).imag();
      }
    }
  });
}

qgeo_status qgeo_evolve(const qgeo_hamiltonian* h, const double* psi0, double t, double dt, double* psi_out) {
  return guarded([&] {
    require(h, "h");
    require(psi_out, "psi_out");
    const size_t dim = qgeo_hamiltonian_dim(h);
    const qgeo::StateVector start = read_state(psi0, dim, "psi0");
    if (const auto* st = std::get_if<qgeo::StationaryHamiltonian>(&h->h)) {
      write_vector(qgeo::evolve_stationary(*st, start, t).amplitudes(), psi_out);
      return;
    }
    qgeo::TimeDependentHamiltonian td = std::get<qgeo::TimeDependentHamiltonian>(h->h);
    if (!(t >= td.t0 && t <= td.t1)) qgeo::fail(qgeo::ErrorKind::InvalidArgument, "t outside the schedule domain");
    if (t == td.t0) {
      write_vector(start.amplitudes(), psi_out);
      return;
    }
    td.t1 = t;
    qgeo::PropagationConfig cfg;
    cfg.dt = dt;
    write_vector(qgeo::evolve_timedep(td, start, cfg).back().amplitudes(), psi_out);
  });
}

qgeo_status qgeo_min_gap(const qgeo_hamiltonian* h, size_t points, double* g_min, double* arg_min) {
  return guarded([&] {
    require(h, "h");
    require(g_min, "g_min");
    require(arg_min, "arg_min");
    const auto* td = std::get_if<qgeo::TimeDependentHamiltonian>(&h->h);
    if (td == nullptr) qgeo::fail(qgeo::ErrorKind::InvalidArgument, "minimum gap needs a time-dependent generator");
    const qgeo::GapReport r = qgeo::min_gap(qgeo::track(*td, points));
    *g_min = r.g_min;
    *arg_min = r.arg_min;
  });
}

void qgeo_hamiltonian_free(qgeo_hamiltonian* h) { delete h; }

qgeo_status qgeo_prob_fg(double x, double energy, double t, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::prob_fg(x, energy, t);
  });
}

qgeo_status qgeo_prob_fenner(double x, double energy, double t, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::prob_fenner(x, energy, t);
  });
}

qgeo_status qgeo_characteristic_times(double x, double energy, double* t_fg, double* t_fenner, double* t_opt) {
  return guarded([&] {
    require(t_fg, "t_fg");
    require(t_fenner, "t_fenner");
    require(t_opt, "t_opt");
    const qgeo::CharacteristicTimes ct = qgeo::characteristic_times(x, energy);
    *t_fg = ct.t_fg;
    *t_fenner = ct.t_fenner;
    *t_opt = ct.t_opt_for_overlap;
  });
}

qgeo_status qgeo_equal_dispersion_ratio(double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::equal_dispersion_ratio(x);
  });
}

qgeo_status qgeo_fidelity(const double* a, const double* b, size_t dim, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::fidelity(read_state(a, dim, "a"), read_state(b, dim, "b"));
  });
}

qgeo_status qgeo_grover_equivalence(int n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::grover_equivalence(n);
  });
}

qgeo_status qgeo_epsilon_residual(double epsilon, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = qgeo::epsilon_residual(epsilon);
  });
}

}  // extern "C"
