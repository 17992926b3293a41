"""Smoke tests for the python bindings: every major operation is touched
once with values pinned by the C++ suites."""

import sys

import graphmonads as gm


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)
    print("ok:", msg)


def main():
    g = gm.square_with_chord()
    check(g.vertex_count() == 4 and g.edge_count() == 5, "square-with-chord fixture")

    parsed = gm.parse_edge_list("a b\nb c")
    check(parsed.neighbors("b") == ["a", "c"], "edge-list parsing")
    check(gm.parse_edge_list(parsed.text()) == parsed, "serialize round trip")
    check(parsed.dot().startswith("graph {"), "dot rendering")

    prod = gm.graph_product(g, g)
    check(prod.vertex_count() == 16, "graph product size")

    matchings = gm.enumerate_matchings(g)
    check(len(matchings) == 2, "two matchings on the square with chord")
    check(matchings[0].partner_map() == {"a": "b", "b": "a", "c": "d", "d": "c"},
          "first matching pairs a-b and c-d")
    check(matchings[1].partner_map() == {"a": "c", "b": "d", "c": "a", "d": "b"},
          "second matching pairs a-c and b-d")

    for law, ok, witness in gm.check_monad_laws_T(g) + gm.check_monad_laws_S(g):
        check(ok, f"monad law {law}")

    algebras = gm.enumerate_T_algebras(g)
    check(len(algebras) == 2, "algebra count equals matching count")
    back = gm.algebra_to_matching(algebras[0])
    check(gm.matching_to_algebra(back) == algebras[0], "algebra round trip")

    tk2 = gm.T_on_objects(gm.parse_edge_list("a b"))
    check(tk2.vertex_count() == 4 and tk2.edge_count() == 3, "pendant-edge functor on an edge")
    check(gm.mu_S_vertex("{{a},{a,b}}") == "{b}", "symmetric-difference fold")

    fano = gm.fano_plane()
    check(gm.is_complete_sts(fano), "fano is a complete system")
    check(gm.support_graph(fano).edge_count() == 21, "fano support graph is K7")

    ff = gm.product_psts(fano, fano)
    check(len(ff.points()) == 49 and len(ff.triples()) == 294, "fano x fano product")
    check(gm.check_psts(ff.points(), ff.triples()).ok, "product is a valid system")

    k3 = gm.complete_graph(3)
    systems = gm.enumerate_psts_on(k3)
    salgs = gm.enumerate_S_algebras(k3)
    check(len(systems) == 1 and len(salgs) == 1, "one triple system on a triangle")
    check(gm.algebra_to_psts(salgs[0]) == systems[0], "algebra/system bijection")

    homs = gm.enumerate_homs(gm.parse_edge_list("a b"), k3)
    check(len(homs) == 6, "six homomorphisms from an edge into a triangle")

    try:
        gm.parse_edge_list("a a")
        check(False, "loop edge must raise")
    except gm.GraphError:
        check(True, "loop edge raises GraphError")

    swap = gm.PerfectMatching(gm.parse_edge_list("a b"), {"a": "b", "b": "a"})
    prod_m = gm.product_perf(swap, swap)
    check(prod_m.partner("(a,a)") == "(b,b)", "product matching rule")

    eq_obj, eq_incl = gm.equalizer_perf(gm.identity_hom(g), gm.identity_hom(g),
                                        gm.PerfectMatching(g, matchings[0].partner_map()),
                                        gm.PerfectMatching(g, matchings[0].partner_map()))
    check(eq_obj.graph == g, "equalizer of equal morphisms is the whole object")

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
