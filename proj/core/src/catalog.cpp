#include "apexkit/catalog.hpp"

#include <array>

#include "apexkit/errors.hpp"

namespace apexkit {

namespace {

struct Row {
  std::string_view g6;
  Figure figure;
};

// Appendix blocks, verbatim and in printed order.
constexpr std::array<Row, 133> kRows{{
    // NonPlanarC
    {R"(I`KxuJBpw)", Figure::NonPlanarC},
    {R"(J]oo?CJ@w^_)", Figure::NonPlanarC},
    {R"(IJaK[\x\_)", Figure::NonPlanarC},
    {R"(J]oo?SJ@wN_)", Figure::NonPlanarC},
    {R"(Js?GZ`oBw^?)", Figure::NonPlanarC},
    {R"(J?C^F?]FV@_)", Figure::NonPlanarC},
    {R"(JWC]E?]FPF_)", Figure::NonPlanarC},
    {R"(JWCXEC]FUD_)", Figure::NonPlanarC},
    {R"(J@KEMJCNHu?)", Figure::NonPlanarC},
    {R"(J`MAIIBNHu?)", Figure::NonPlanarC},
    {R"(J`MAIIBNPt?)", Figure::NonPlanarC},
    {R"(Ks?GOKH@b`mE)", Figure::NonPlanarC},
    {R"(K??WooEwV@[K)", Figure::NonPlanarC},
    {R"(Ko?WooEWR@ON)", Figure::NonPlanarC},
    {R"(K?Ku?CKKUBWM)", Figure::NonPlanarC},
    {R"(K]??WWKKME?])", Figure::NonPlanarC},
    {R"(K]?M@_IA_J_m)", Figure::NonPlanarC},
    {R"(K]?M@_I@gQ_l)", Figure::NonPlanarC},
    {R"(JwCWFFaFo|?)", Figure::NonPlanarC},
    {R"(K]?GWB@KO^@y)", Figure::NonPlanarC},
    {R"(Lr??WYOBGEK@?N)", Figure::NonPlanarC},
    // Disjoint2Cuts
    {R"(IwC^F?^Fo)", Figure::Disjoint2Cuts},
    {R"(Jr?G[`_Bw^?)", Figure::Disjoint2Cuts},
    {R"(Kr?GOMOAWLKB)", Figure::Disjoint2Cuts},
    // Intersecting2Cuts
    {R"(KwCW?CB~FFb~)", Figure::Intersecting2Cuts},
    {R"(L]?GW?@?][ENB~)", Figure::Intersecting2Cuts},
    {R"(LF?GW?@?^[[MB~)", Figure::Intersecting2Cuts},
    {R"(M?ope???G@}?A^@n_)", Figure::Intersecting2Cuts},
    {R"(M?B_oo??G@~??~wM_)", Figure::Intersecting2Cuts},
    {R"(M??CZ_??G@~_bM[M_)", Figure::Intersecting2Cuts},
    {R"(No@_??B?ooB?f??NkWW)", Figure::Intersecting2Cuts},
    {R"(N?@_op__C?O?@N?vN?W)", Figure::Intersecting2Cuts},
    {R"(N?KsA@?OC?O??~BbEMG)", Figure::Intersecting2Cuts},
    {R"(NCO`@@?OC?O?ENDr@}?)", Figure::Intersecting2Cuts},
    {R"(LJ?GW?@?^{]Mb{)", Figure::Intersecting2Cuts},
    {R"(MBW?GK??G@{weM`}?)", Figure::Intersecting2Cuts},
    {R"(N?B@`b????_B}?BN@Z_)", Figure::Intersecting2Cuts},
    {R"(Oo@_??B?ooB???f?_FrEC)", Figure::Intersecting2Cuts},
    // MoreIntersecting2Cuts
    {R"(K`K?GN?N~pW|)", Figure::MoreIntersecting2Cuts},
    {R"(L]?GW?@?XbxqB})", Figure::MoreIntersecting2Cuts},
    {R"(Ls?G?CBBBf`}^D)", Figure::MoreIntersecting2Cuts},
    {R"(M?ope???N_?FA\@l_)", Figure::MoreIntersecting2Cuts},
    {R"(M??Wv???G@_v}AwN?)", Figure::MoreIntersecting2Cuts},
    {R"(LWCW?CBo@Fz`F{)", Figure::MoreIntersecting2Cuts},
    {R"(MEo`?K??G@{G@nE]?)", Figure::MoreIntersecting2Cuts},
    {R"(M?CV?W??G@`f{Pw]?)", Figure::MoreIntersecting2Cuts},
    {R"(N??@`_KBE?W??NBp]?O)", Figure::MoreIntersecting2Cuts},
    {R"(N??BB?[_C??Bw@FEbw_)", Figure::MoreIntersecting2Cuts},
    {R"(M?KuE???G@}??~B]?)", Figure::MoreIntersecting2Cuts},
    {R"(M??^?o??G@_n}@w]?)", Figure::MoreIntersecting2Cuts},
    {R"(N???@_oBe?W?{?Bb`{_)", Figure::MoreIntersecting2Cuts},
    {R"(LWCW?CBGEww]F{)", Figure::MoreIntersecting2Cuts},
    {R"(M?NE?O??G@}G@}K]?)", Figure::MoreIntersecting2Cuts},
    {R"(M??^?G??G@bN}Ow]?)", Figure::MoreIntersecting2Cuts},
    {R"(No???oE@_oO?F`WRKE_)", Figure::MoreIntersecting2Cuts},
    {R"(N??uE?GA?O?_{@?~EF_)", Figure::MoreIntersecting2Cuts},
    {R"(L?CW?CBwFw[[F{)", Figure::MoreIntersecting2Cuts},
    {R"(M?BE@o??G@~?MM@}?)", Figure::MoreIntersecting2Cuts},
    {R"(M??F?w??G@bf~?w]?)", Figure::MoreIntersecting2Cuts},
    {R"(N????oE@_o[?F`wQ[E?)", Figure::MoreIntersecting2Cuts},
    {R"(N??EE?C@?GF?}??~FF?)", Figure::MoreIntersecting2Cuts},
    // ThirtyThree
    {R"(JwC?G{]}^N?)", Figure::ThirtyThree},
    {R"(K]?G?FKKo^`})", Figure::ThirtyThree},
    {R"(Ks?G?CNBrxm])", Figure::ThirtyThree},
    {R"(KWC?GKwuENB})", Figure::ThirtyThree},
    {R"(L?r@_?@?xbFao])", Figure::ThirtyThree},
    {R"(L??^??@@Wr^Aw])", Figure::ThirtyThree},
    {R"(K?CW?FbwvwB})", Figure::ThirtyThree},
    {R"(L?BE??@}@rFK@z)", Figure::ThirtyThree},
    {R"(L??F??@FWz^_w])", Figure::ThirtyThree},
    {R"(KoCW?DbWsxb})", Figure::ThirtyThree},
    {R"(LEo`??@w?N_}EZ)", Figure::ThirtyThree},
    {R"(L?CV??@BWZ]Bw])", Figure::ThirtyThree},
    {R"(LQQ@}???G@cnE])", Figure::ThirtyThree},
    {R"(M]??OGCA?F`_KdoX?)", Figure::ThirtyThree},
    {R"(MF??OGCA?F`_wdwX?)", Figure::ThirtyThree},
    {R"(LQQBKo??G@cnEm)", Figure::ThirtyThree},
    {R"(M]??OGCA?K`KKdoY?)", Figure::ThirtyThree},
    {R"(MF??OGCA?K`KwdwY?)", Figure::ThirtyThree},
    {R"(LBa??CBFBWK]_})", Figure::ThirtyThree},
    {R"(M]??GGGA@`_]p@Aq_)", Figure::ThirtyThree},
    {R"(M?w??KOC?B_uxa{B?)", Figure::ThirtyThree},
    {R"(LW???CBNEwB{o{)", Figure::ThirtyThree},
    {R"(M]?GO???@b_}A[p__)", Figure::ThirtyThree},
    {R"(MF??W????F`mw[zA?)", Figure::ThirtyThree},
    {R"(LSP??CBN@wO^O})", Figure::ThirtyThree},
    {R"(M???WZ?K?F@a{B{B?)", Figure::ThirtyThree},
    {R"(MCaAA?_G?F_]VBNB?)", Figure::ThirtyThree},
    {R"(Lo???CB^BwB{_})", Figure::ThirtyThree},
    {R"(M???@_oo?Bforara?)", Figure::ThirtyThree},
    {R"(MS`A????@r_}@{]@_)", Figure::ThirtyThree},
    {R"(L????CB~FwP{[w)", Figure::ThirtyThree},
    {R"(M]??????E[EMB{B{?)", Figure::ThirtyThree},
    {R"(Ms???????^`}]K\o?)", Figure::ThirtyThree},
    // ThirtyNine
    {R"(I@NEE?~No)", Figure::ThirtyNine},
    {R"(Jr??WWKczF?)", Figure::ThirtyNine},
    {R"(Js??WWK[zf?)", Figure::ThirtyNine},
    {R"(J@K?ENEnb{?)", Figure::ThirtyNine},
    {R"(K]????NBuUEw)", Figure::ThirtyNine},
    {R"(Ks????NBruMw)", Figure::ThirtyNine},
    {R"(J?CXFFav`~?)", Figure::ThirtyNine},
    {R"(K?r??CrKpyW])", Figure::ThirtyNine},
    {R"(KF???CNBvY[])", Figure::ThirtyNine},
    {R"(K??G[``{C|Lw)", Figure::ThirtyNine},
    {R"(L]????N?oWxaKq)", Figure::ThirtyNine},
    {R"(Ls????NAOKnH\c)", Figure::ThirtyNine},
    {R"(K@?GXBPw?}xw)", Figure::ThirtyNine},
    {R"(L]???OF?O[eqqK)", Figure::ThirtyNine},
    {R"(LF???OF?O[{qyK)", Figure::ThirtyNine},
    {R"(K???GNw}C}Lw)", Figure::ThirtyNine},
    {R"(L]?????rHf@{Bw)", Figure::ThirtyNine},
    {R"(Ls?????Bw^NK\g)", Figure::ThirtyNine},
    {R"(K@C?GNgy?nxw)", Figure::ThirtyNine},
    {R"(LBW?CA?@wNBswE)", Figure::ThirtyNine},
    {R"(L?`o?A?AwVM[{E)", Figure::ThirtyNine},
    {R"(MQQ@Go??G@wWH]Em?)", Figure::ThirtyNine},
    {R"(N]??OGCA?C_KBBKdWL?)", Figure::ThirtyNine},
    {R"(Ns??OGCA?C_KBB[dML?)", Figure::ThirtyNine},
    {R"(K`?G]?o{]^F{)", Figure::ThirtyNine},
    {R"(L]?G?CK?pxw]B{)", Figure::ThirtyNine},
    {R"(Ls?G?CK?o^ne[{)", Figure::ThirtyNine},
    {R"(MIa?X`L???_BKf_v?)", Figure::ThirtyNine},
    {R"(NBW?GI?_?@_W@LEq[@_)", Figure::ThirtyNine},
    {R"(N?w?GGOC?@_W@Lwq]@_)", Figure::ThirtyNine},
    {R"(LoD_?CBECwk]F{)", Figure::ThirtyNine},
    {R"(M?NE@_??G@`NLao]?)", Figure::ThirtyNine},
    {R"(M?CV?W??G@aNzAw]?)", Figure::ThirtyNine},
    {R"(MSP@x_K???_B_^O^?)", Figure::ThirtyNine},
    {R"(N]??OOC@?E?E?{MBW`_)", Figure::ThirtyNine},
    {R"(Ns??OOC@?E?E?{]BM`_)", Figure::ThirtyNine},
    {R"(LWC?GN?EEoc}F{)", Figure::ThirtyNine},
    {R"(M@JE?o??G@bFHqo]?)", Figure::ThirtyNine},
    {R"(M??^??@E?BBLxEw]?)", Figure::ThirtyNine},
}};

constexpr std::uint64_t fnv1a(const std::array<Row, 133>& rows) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Row& r : rows) {
    for (char c : r.g6) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 0x100000001b3ULL;
  }
  return h;
}

static_assert(fnv1a(kRows) == kCatalogChecksum, "embedded catalog does not match its checksum");

}  // namespace

std::string to_string(Figure f) {
  switch (f) {
    case Figure::NonPlanarC: return "NonPlanarC";
    case Figure::Disjoint2Cuts: return "Disjoint2Cuts";
    case Figure::Intersecting2Cuts: return "Intersecting2Cuts";
    case Figure::MoreIntersecting2Cuts: return "MoreIntersecting2Cuts";
    case Figure::ThirtyThree: return "ThirtyThree";
    case Figure::ThirtyNine: return "ThirtyNine";
  }
  return "?";
}

Figure figure_from_string(std::string_view name) {
  for (Figure f : all_figures()) {
    if (to_string(f) == name) return f;
  }
  throw Error("unknown figure " + std::string(name));
}

std::vector<Figure> all_figures() {
  return {Figure::NonPlanarC, Figure::Disjoint2Cuts, Figure::Intersecting2Cuts,
          Figure::MoreIntersecting2Cuts, Figure::ThirtyThree, Figure::ThirtyNine};
}

ObstructionClass expected_class(Figure f) {
  switch (f) {
    case Figure::NonPlanarC: return ObstructionClass::HeavyNonplanar;
    case Figure::Disjoint2Cuts: return ObstructionClass::DisjointCuts;
    case Figure::Intersecting2Cuts: return ObstructionClass::MultiCutsGe3;
    case Figure::MoreIntersecting2Cuts: return ObstructionClass::ExactlyTwoCuts;
    case Figure::ThirtyThree: return ObstructionClass::UniqueCutSplit;
    case Figure::ThirtyNine: return ObstructionClass::UniqueCutNosplit;
  }
  throw Error("bad figure");
}

std::size_t expected_block_size(Figure f) {
  switch (f) {
    case Figure::NonPlanarC: return 21;
    case Figure::Disjoint2Cuts: return 3;
    case Figure::Intersecting2Cuts: return 14;
    case Figure::MoreIntersecting2Cuts: return 23;
    case Figure::ThirtyThree: return 33;
    case Figure::ThirtyNine: return 39;
  }
  return 0;
}

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;
  out.reserve(kRows.size());
  for (const Row& r : kRows) out.push_back({std::string(r.g6), r.figure, expected_class(r.figure)});
  return out;
}

std::vector<std::string> figure_block(Figure f) {
  std::vector<std::string> out;
  for (const Row& r : kRows) {
    if (r.figure == f) out.emplace_back(r.g6);
  }
  return out;
}

std::uint64_t catalog_checksum() { return fnv1a(kRows); }

}  // namespace apexkit
