#include "plie/corpus.hpp"

#include "plie/format.hpp"

namespace plie {

// Verdict quadruples: (non-matrix PI, Lie solvable, Lie nilpotent,
// Lie super-nilpotent). All derived by the condition side of the structure
// theorems and cross-checked by the series oracles in the acceptance suite.
const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      // 2-dim abelian even algebra; u(L) is a truncated polynomial ring.
      {"abelian_p3",
       R"({ "p": 3, "even": ["a1", "a2"], "odd": [], "bracket": {}, "pmap": {} })",
       {true, true, true, true}},

      // One toral generator h^[3] = h; u(L) = F[h]/(h^3 - h) is commutative,
      // so everything holds even though h is not p-nilpotent.
      {"toral_p3",
       R"({ "p": 3, "even": ["h"], "odd": [], "bracket": {}, "pmap": { "h": { "h": 1 } } })",
       {true, true, true, true}},

      // Grassmann algebras: pure odd abelian, u(L) is the exterior algebra.
      {"grassmann2_p3",
       R"({ "p": 3, "even": [], "odd": ["f1", "f2"], "bracket": {}, "pmap": {} })",
       {true, true, true, true}},
      {"grassmann3_p3",
       R"({ "p": 3, "even": [], "odd": ["f1", "f2", "f3"], "bracket": {}, "pmap": {} })",
       {true, true, true, true}},

      // Heisenberg algebra (e1,e2) = e3 with trivial p-map; p-nilpotent even
      // part, so the augmentation ideal is nilpotent.
      {"heisenberg_p3",
       R"({ "p": 3, "even": ["e1", "e2", "e3"], "odd": [],
            "bracket": { "e1,e2": { "e3": 1 } }, "pmap": {} })",
       {true, true, true, true}},
      {"heisenberg_p5",
       R"({ "p": 5, "even": ["e1", "e2", "e3"], "odd": [],
            "bracket": { "e1,e2": { "e3": 1 } }, "pmap": {} })",
       {true, true, true, true}},

      // Heisenberg with a nontrivial p-map a^[3] = c; exercises the Jacobson
      // sum rule with a genuinely non-additive extension target.
      {"nilpotent_pmap_p3",
       R"({ "p": 3, "even": ["a", "b", "c"], "odd": [],
            "bracket": { "a,b": { "c": 1 } }, "pmap": { "a": { "c": 1 } } })",
       {true, true, true, true}},

      // Toral x with one odd z, (z,z) = x: u(L) = F[x,z]/(x^3 - x, z^2 - 2x)
      // is commutative; the witness M is forced down to 0.
      {"toral_clifford_p3",
       R"({ "p": 3, "even": ["x"], "odd": ["z"],
            "bracket": { "z,z": { "x": 1 } }, "pmap": { "x": { "x": 1 } } })",
       {true, true, true, true}},

      // Two odd generators squaring to the same toral element: the Clifford
      // obstruction. No hyperplane of L1 has p-nilpotent bracket with L1.
      {"clifford2_p3",
       R"({ "p": 3, "even": ["x"], "odd": ["a", "b"],
            "bracket": { "a,a": { "x": 1 }, "b,b": { "x": 1 } },
            "pmap": { "x": { "x": 1 } } })",
       {false, false, false, false}},

      // Odd weight vector: (z,x) = z for toral x. Solvable but the adjoint
      // action of L0 is not nilpotent.
      {"weight_vector_p3",
       R"({ "p": 3, "even": ["x"], "odd": ["z"],
            "bracket": { "x,z": { "z": -1 } }, "pmap": { "x": { "x": 1 } } })",
       {true, true, false, false}},

      // (a,a) = x toral, (b,b) = 0: the witness must be the genuine
      // hyperplane span{b}. L is nilpotent, so u(L) is Lie super-nilpotent,
      // yet (L1,L1) contains the toral x and dim L1 = 2, so u(L) is not Lie
      // nilpotent.
      {"mixed_witness_p3",
       R"({ "p": 3, "even": ["x"], "odd": ["a", "b"],
            "bracket": { "a,a": { "x": 1 } }, "pmap": { "x": { "x": 1 } } })",
       {true, true, false, true}},

      // Nilpotent action of L0 on the odd part: (y1, x) = -y2.
      {"odd_module_p3",
       R"({ "p": 3, "even": ["x"], "odd": ["y1", "y2"],
            "bracket": { "x,y1": { "y2": 1 } }, "pmap": {} })",
       {true, true, true, true}},

      // sl2: the negative control. (L0,L0) = L0 contains the toral h.
      {"sl2_p3",
       R"({ "p": 3, "even": ["e", "h", "f"], "odd": [],
            "bracket": { "e,h": { "e": -2 }, "e,f": { "h": 1 },
                         "h,f": { "f": -2 } },
            "pmap": { "h": { "h": 1 } } })",
       {false, false, false, false}},
      {"sl2_p5",
       R"({ "p": 5, "even": ["e", "h", "f"], "odd": [],
            "bracket": { "e,h": { "e": -2 }, "e,f": { "h": 1 },
                         "h,f": { "f": -2 } },
            "pmap": { "h": { "h": 1 } } })",
       {false, false, false, false}},

      // Borel subalgebra of sl2: solvable, not nilpotent; (L0,L0) = Fe is
      // p-nilpotent while h itself is toral.
      {"borel_p5",
       R"({ "p": 5, "even": ["h", "e"], "odd": [],
            "bracket": { "h,e": { "e": 2 } }, "pmap": { "h": { "h": 1 } } })",
       {true, true, false, false}},

      // Abelian mixed algebra at p = 5: truncated polynomials tensor a rank-1
      // Grassmann factor; u(L) is commutative of dimension 50.
      {"poly_grassmann_p5",
       R"({ "p": 5, "even": ["x1", "x2"], "odd": ["f"], "bracket": {}, "pmap": {} })",
       {true, true, true, true}},

      // Large abelian algebra: dim u(L) = 3^5 * 2 = 486, near the corpus cap.
      {"abelian_big_p3",
       R"({ "p": 3, "even": ["x1", "x2", "x3", "x4", "x5"], "odd": ["g"],
            "bracket": {}, "pmap": {} })",
       {true, true, true, true}},
  };
  return corpus;
}

LieSuperData corpus_algebra(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return parse_algebra(e.json_text);
  throw Error("no builtin corpus entry named '" + name + "'");
}

}  // namespace plie
