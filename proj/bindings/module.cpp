#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptopo/combinatorics.hpp"
#include "ptopo/complexes.hpp"
#include "ptopo/morse.hpp"
#include "ptopo/posets.hpp"
#include "ptopo/representation.hpp"
#include "ptopo/verify.hpp"

namespace py = pybind11;
using namespace ptopo;

namespace {

Composition make_comp(const std::vector<int>& parts) {
  Composition c(parts);
  if (!c.valid()) throw py::value_error("not a pointed composition");
  return c;
}

py::dict profile_to_dict(const HomologyProfile& hp) {
  py::dict d;
  py::dict betti;
  for (size_t i = 0; i < hp.betti.size(); ++i)
    if (hp.betti[i] != 0) betti[py::int_(static_cast<int>(i) - 1)] = hp.betti[i];
  py::dict torsion;
  for (size_t i = 0; i < hp.torsion.size(); ++i)
    if (!hp.torsion[i].empty()) {
      py::list t;
      for (const Int& v : hp.torsion[i]) t.append(v.convert_to<long long>());
      torsion[py::int_(static_cast<int>(i) - 1)] = t;
    }
  d["betti"] = betti;
  d["torsion"] = torsion;
  d["top_dim"] = hp.top_dim;
  return d;
}

std::vector<std::vector<std::vector<int>>> faces_as_lists(const OrderedComplex& K) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& level : K.by_blocks)
    for (const Osp& f : level) {
      std::vector<std::vector<int>> face;
      for (Mask b : f.blocks) face.push_back(mask_elements(b));
      out.push_back(std::move(face));
    }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ptopo, mod) {
  mod.doc() = "Exact computations on pointed partition posets and their complexes";

  mod.def("beta", [](const std::vector<int>& parts) { return beta(make_comp(parts)); },
          py::arg("composition"),
          "Number of permutations whose descent composition equals the argument");

  mod.def("descent_composition",
          [](const Perm& a) {
            if (!is_permutation_word(a)) throw py::value_error("not a permutation");
            return descent_composition(a).parts;
          },
          py::arg("permutation"));

  mod.def("descent_class",
          [](const std::vector<int>& parts) {
            return perms_with_descent_composition(make_comp(parts));
          },
          py::arg("composition"));

  mod.def("compositions",
          [](int n, bool positive_last) {
            std::vector<std::vector<int>> out;
            for (const Composition& c :
                 positive_last ? all_positive_compositions(n)
                               : all_pointed_compositions(n))
              out.push_back(c.parts);
            return out;
          },
          py::arg("n"), py::arg("positive_last") = false);

  mod.def("complement",
          [](const std::vector<int>& parts) {
            return complement_composition(make_comp(parts)).parts;
          },
          py::arg("composition"));

  mod.def("is_knapsack", &is_knapsack, py::arg("lambda_parts"));

  mod.def("v_set",
          [](const std::vector<int>& lam, int m) {
            KnapsackPartition kp(lam, m);
            std::vector<std::vector<int>> out;
            for (const Composition& d : kp.v_set()) out.push_back(d.parts);
            return out;
          },
          py::arg("lambda_parts"), py::arg("m"));

  mod.def("kappa",
          [](const std::vector<int>& lam, int m, int s) {
            return KnapsackPartition(lam, m).kappa(s);
          },
          py::arg("lambda_parts"), py::arg("m"), py::arg("s"));

  mod.def("delta_homology",
          [](const std::vector<int>& parts) {
            return profile_to_dict(reduced_homology(build_delta_c(make_comp(parts))));
          },
          py::arg("composition"));

  mod.def("lambda_homology",
          [](const std::vector<int>& lam, int m) {
            KnapsackPartition kp(lam, m);
            return profile_to_dict(reduced_homology(build_lambda(kp)));
          },
          py::arg("lambda_parts"), py::arg("m"));

  mod.def("delta_faces",
          [](const std::vector<int>& parts) {
            return faces_as_lists(build_delta_c(make_comp(parts)));
          },
          py::arg("composition"));

  mod.def("lambda_faces",
          [](const std::vector<int>& lam, int m) {
            return faces_as_lists(build_lambda(KnapsackPartition(lam, m)));
          },
          py::arg("lambda_parts"), py::arg("m"));

  mod.def("critical_cells",
          [](const std::vector<int>& lam, int m) {
            KnapsackPartition kp(lam, m);
            MorseMatching mm = build_matching(kp);
            std::vector<std::string> out;
            for (const Osp& f : mm.critical_cells()) out.push_back(f.to_string());
            return out;
          },
          py::arg("lambda_parts"), py::arg("m"));

  mod.def("mobius_pi_c",
          [](const std::vector<int>& parts) {
            PointedPoset pp = build_subposet_pi_c(make_comp(parts));
            return mobius(pp.poset.with_bottom());
          },
          py::arg("composition"),
          "Mobius value of the composition subposet with a bottom adjoined");

  mod.def("mobius_filter",
          [](const std::vector<int>& lam, int m) {
            PointedPoset pp = build_filter(KnapsackPartition(lam, m));
            return mobius(pp.poset.with_bottom());
          },
          py::arg("lambda_parts"), py::arg("m"));

  mod.def("cycle",
          [](const Perm& alpha, const std::vector<int>& parts) {
            ChainElement g = cycle_g_alpha(alpha, make_comp(parts));
            std::map<std::string, long long> out;
            for (const auto& [f, v] : g.coeff) out[f.to_string()] = v;
            return out;
          },
          py::arg("alpha"), py::arg("composition"));

  mod.def("run_suite",
          [](const std::string& suite, int max_n, int jobs, unsigned rng_seed) {
            VerificationReport r = run_suite(suite, max_n, jobs, rng_seed);
            py::list out;
            for (const Claim& c : r.claims) {
              py::dict d;
              d["id"] = c.id;
              d["statement"] = c.statement;
              d["pass"] = c.pass;
              d["witness"] = c.witness;
              d["wall_time"] = c.wall_time;
              out.append(d);
            }
            return out;
          },
          py::arg("suite"), py::arg("max_n"), py::arg("jobs") = 1,
          py::arg("rng_seed") = 0);
}
