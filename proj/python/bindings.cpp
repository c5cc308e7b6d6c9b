#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pxp/cli_app.hpp"
#include "pxp/cohomology.hpp"
#include "pxp/construction.hpp"
#include "pxp/equivalence.hpp"
#include "pxp/restrictions.hpp"

namespace py = pybind11;

namespace {

using PairCoeffs = std::vector<std::vector<std::int64_t>>;

pxp::FormPair pair_from_coeffs(const pxp::FieldContext& ctx, const PairCoeffs& coeffs) {
    if (coeffs.size() != 2)
        throw pxp::InvalidParameter("a pair is two coefficient lists");
    auto form = [&ctx](const std::vector<std::int64_t>& cs) {
        std::vector<pxp::FieldElement> es;
        es.reserve(cs.size());
        for (auto v : cs) es.push_back(ctx.element(v));
        return pxp::BinaryForm(ctx, std::move(es));
    };
    return pxp::FormPair(form(coeffs[0]), form(coeffs[1]));
}

PairCoeffs pair_to_coeffs(const pxp::FormPair& pair) {
    PairCoeffs out(2);
    for (const auto& c : pair.q1().coefficients()) out[0].push_back(c.value());
    for (const auto& c : pair.q2().coefficients()) out[1].push_back(c.value());
    return out;
}

std::vector<std::int64_t> matrix_to_list(const pxp::Matrix2& m) {
    return {m.m11().value(), m.m12().value(), m.m21().value(), m.m22().value()};
}

pxp::RotationData rotation_from_lists(const pxp::FieldContext& ctx, std::uint32_t n,
                                      const std::vector<std::int64_t>& r,
                                      const std::vector<std::int64_t>& q) {
    auto elems = [&ctx](const std::vector<std::int64_t>& vs) {
        std::vector<pxp::FieldElement> es;
        es.reserve(vs.size());
        for (auto v : vs) es.push_back(ctx.element(v));
        return es;
    };
    return pxp::RotationData(ctx, n, elems(r), elems(q));
}

pxp::SearchLimits limits_for(std::uint32_t limit_pairs, std::uint32_t limit_brute) {
    pxp::SearchLimits limits;
    limits.max_prime_enumeration = limit_pairs;
    limits.max_prime_brute_force = limit_brute;
    return limits;
}

} // namespace

PYBIND11_MODULE(pxp, m) {
    m.doc() = "classification of free (Z/p)^2 actions on S^n x S^n via pairs of "
              "binary forms over F_p";

    py::register_exception<pxp::ResourceLimit>(m, "ResourceLimitError",
                                               PyExc_RuntimeError);
    py::register_exception<pxp::DomainRejection>(m, "DomainRejectionError",
                                                 PyExc_ValueError);
    py::register_exception<pxp::InvalidArgument>(m, "InvalidArgumentError",
                                                 PyExc_ValueError);

    m.def("legendre",
          [](std::uint32_t p, std::int64_t x) {
              return pxp::legendre(pxp::FieldContext(p).element(x));
          },
          py::arg("p"), py::arg("x"));

    m.def("sqrt_mod",
          [](std::uint32_t p, std::int64_t x) -> std::optional<std::uint32_t> {
              auto r = pxp::sqrt(pxp::FieldContext(p).element(x));
              if (!r) return std::nullopt;
              return r->value();
          },
          py::arg("p"), py::arg("x"));

    m.def("fourth_power_class",
          [](std::uint32_t p, std::int64_t x) {
              return pxp::fourth_power_class(pxp::FieldContext(p).element(x));
          },
          py::arg("p"), py::arg("x"));

    m.def("class_representatives",
          [](std::uint32_t p) {
              std::vector<std::uint32_t> out;
              for (const auto& r : pxp::class_representatives(pxp::FieldContext(p)))
                  out.push_back(r.value());
              return out;
          },
          py::arg("p"));

    m.def("is_realizable",
          [](std::uint32_t p, const PairCoeffs& pair) {
              pxp::FieldContext ctx(p);
              return pxp::is_realizable(pair_from_coeffs(ctx, pair));
          },
          py::arg("p"), py::arg("pair"));

    m.def("classify",
          [](std::uint32_t p, const PairCoeffs& pair) {
              pxp::FieldContext ctx(p);
              pxp::CanonicalForm cf = pxp::canonical_form(pair_from_coeffs(ctx, pair));
              py::dict out;
              out["realizable"] = cf.normal.realizable();
              if (cf.normal.realizable()) {
                  out["w"] = cf.normal.w->value();
                  out["class_index"] = pxp::fourth_power_class(*cf.normal.w);
                  out["representative"] =
                      pair_to_coeffs(cf.normal.representative(ctx));
                  out["S"] = matrix_to_list(cf.witness.S);
                  out["R"] = matrix_to_list(cf.witness.R);
              }
              return out;
          },
          py::arg("p"), py::arg("pair"));

    m.def("decide_equivalent",
          [](std::uint32_t p, const PairCoeffs& a, const PairCoeffs& b,
             const std::string& mode) -> std::optional<py::dict> {
              pxp::FieldContext ctx(p);
              auto w = pxp::decide_equivalent(pair_from_coeffs(ctx, a),
                                              pair_from_coeffs(ctx, b),
                                              pxp::EquivalenceMode::parse(mode));
              if (!w) return std::nullopt;
              py::dict out;
              out["S"] = matrix_to_list(w->S);
              out["R"] = matrix_to_list(w->R);
              return out;
          },
          py::arg("p"), py::arg("a"), py::arg("b"), py::arg("mode") = "full");

    m.def("brute_force_equivalent",
          [](std::uint32_t p, const PairCoeffs& a, const PairCoeffs& b,
             const std::string& mode, std::uint32_t limit) {
              pxp::FieldContext ctx(p);
              return pxp::brute_force_equivalent(pair_from_coeffs(ctx, a),
                                                 pair_from_coeffs(ctx, b),
                                                 pxp::EquivalenceMode::parse(mode),
                                                 limits_for(13, limit));
          },
          py::arg("p"), py::arg("a"), py::arg("b"), py::arg("mode") = "full",
          py::arg("limit") = 7);

    m.def("count_realizable_pairs",
          [](std::uint32_t p, std::uint32_t limit) {
              return pxp::count_realizable_pairs(pxp::FieldContext(p), 2,
                                                 limits_for(limit, 7));
          },
          py::arg("p"), py::arg("limit") = 13);

    m.def("orbit_count",
          [](std::uint32_t p, const std::string& mode, std::uint32_t limit) {
              return pxp::orbit_count(pxp::FieldContext(p),
                                      pxp::EquivalenceMode::parse(mode), 2,
                                      limits_for(limit, 7));
          },
          py::arg("p"), py::arg("mode") = "full", py::arg("limit") = 13);

    m.def("orbits",
          [](std::uint32_t p, const std::string& mode, std::uint32_t limit) {
              pxp::OrbitSummary s =
                  pxp::orbit_enumeration(pxp::FieldContext(p),
                                         pxp::EquivalenceMode::parse(mode), 2,
                                         limits_for(limit, 7));
              py::list orbits;
              for (std::size_t i = 0; i < s.representatives.size(); ++i) {
                  py::dict entry;
                  entry["representative"] = pair_to_coeffs(s.representatives[i]);
                  entry["size"] = s.sizes[i];
                  orbits.append(entry);
              }
              py::dict out;
              out["realizable_pairs"] = s.realizable_count;
              out["orbits"] = orbits;
              return out;
          },
          py::arg("p"), py::arg("mode") = "full", py::arg("limit") = 13);

    m.def("k_invariant",
          [](std::uint32_t p, std::uint32_t n, const std::vector<std::int64_t>& r,
             const std::vector<std::int64_t>& q) {
              pxp::FieldContext ctx(p);
              return pair_to_coeffs(
                  pxp::k_invariant(rotation_from_lists(ctx, n, r, q)));
          },
          py::arg("p"), py::arg("n"), py::arg("R"), py::arg("Q"));

    m.def("is_free",
          [](std::uint32_t p, std::uint32_t n, const std::vector<std::int64_t>& r,
             const std::vector<std::int64_t>& q) {
              pxp::FieldContext ctx(p);
              return pxp::is_free(rotation_from_lists(ctx, n, r, q));
          },
          py::arg("p"), py::arg("n"), py::arg("R"), py::arg("Q"));

    m.def("lens_class",
          [](std::uint32_t p, std::int64_t x, std::int64_t y) {
              pxp::FieldContext ctx(p);
              return pxp::lens_product_class(ctx.element(x), ctx.element(y));
          },
          py::arg("p"), py::arg("x"), py::arg("y"));

    m.def("dim_cohomology", [](std::uint64_t k) {
        pxp::GradedRank d = pxp::dim_cohomology(k);
        return std::make_pair(d.free_rank, d.p_rank);
    });

    m.def("dim_homology", [](std::uint64_t k) {
        pxp::GradedRank d = pxp::dim_homology(k);
        return std::make_pair(d.free_rank, d.p_rank);
    });

    m.def("basis_of_degree",
          [](std::uint32_t p, std::uint32_t k) {
              std::vector<std::string> out;
              for (const auto& m2 : pxp::basis_of_degree(pxp::FieldContext(p), k))
                  out.push_back(m2.to_string());
              return out;
          },
          py::arg("p"), py::arg("k"));

    m.def("zeta_power",
          [](std::uint32_t p, std::uint32_t k, std::uint32_t max_degree) {
              pxp::ZetaForm z = pxp::zeta_power(pxp::FieldContext(p), k, max_degree);
              py::list terms;
              for (const auto& [e, c] : z.poly().terms())
                  terms.append(py::make_tuple(e.first, e.second, c));
              return terms;
          },
          py::arg("p"), py::arg("k"), py::arg("max_degree") = 60);

    m.def("qd_obstruction",
          [](std::uint32_t p, std::uint32_t n) {
              pxp::QdVerdict v = pxp::qd_obstruction(pxp::FieldContext(p), n);
              py::dict out;
              out["status"] = v.obstructed() ? "obstructed" : "not_applicable";
              out["k"] = v.power_k;
              out["half_degree"] = v.half_degree;
              out["pure_x_coeff"] = v.pure_x_coeff;
              out["pure_y_coeff"] = v.pure_y_coeff;
              return out;
          },
          py::arg("p"), py::arg("n"));

    m.def("oracle_sweep",
          [](std::uint32_t p, std::uint64_t seed, std::uint64_t duos) {
              pxp::OracleReport r =
                  pxp::run_oracle_sweep(pxp::FieldContext(p), seed, duos);
              py::dict out;
              out["realizable_pairs"] = r.realizable_count;
              out["orbit_count"] = r.orbit_count;
              out["canonical_classes"] = r.canonical_class_count;
              out["within_orbit_mismatches"] = r.within_orbit_mismatches;
              out["cross_orbit_collisions"] = r.cross_orbit_collisions;
              out["duos_checked"] = r.duos_checked;
              out["duo_disagreements"] = r.duo_disagreements;
              out["clean"] = r.clean();
              return out;
          },
          py::arg("p"), py::arg("seed") = 1, py::arg("duos") = 100);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              pxp::CliResult r = pxp::run_cli(args);
              return py::make_tuple(r.exit_code, r.output);
          },
          py::arg("args"));
}
