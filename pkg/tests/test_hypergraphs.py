"""Widths, representative systems, and colorful simplices.

Hand-derived LP value frozen below: for the triangle hypergraph with edges
{0,1}, {1,2}, {0,2} the intersection matrix has 2 on the diagonal and 1 off
it, uniform weight 1/4 is feasible with total 3/4, and the same vector is a
packing certificate, so the fractional width is exactly 3/4.
"""

import numpy as np
import pytest

from flagspectra import (
    CapExceeded,
    Graph,
    Hypergraph,
    HypergraphFamily,
    PartitionedComplex,
    compare_width_conditions,
    complement,
    complete_graph,
    find_colorful_simplex,
    find_sdr,
    fractional_width,
    incidence_representation,
    line_graph,
    representation_value,
    sdr_search,
    verify_colorful_condition,
    verify_fractional_width_condition,
    verify_integral_width_condition,
    width,
)
from flagspectra.corpus import family_corpus, planted_sdr_family
from flagspectra.hypergraphs import family_from_json_dict, hypergraph_from_json_dict


def triangle_hypergraph():
    return Hypergraph(3, [[0, 1], [1, 2], [0, 2]])


class TestHypergraphType:
    def test_rejects_empty_edge(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [[]])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Hypergraph(2, [[0, 2]])

    def test_keeps_duplicates(self):
        h = Hypergraph(2, [[0], [0]])
        assert h.num_edges == 2

    def test_json_round_trip(self):
        h = hypergraph_from_json_dict({"ground": 3, "edges": [[0, 1], [2]]})
        assert h.edges == ((0, 1), (2,))

    def test_family_json(self):
        fam = family_from_json_dict({"ground": 2, "hypergraphs": [[[0]], [[1]]]})
        assert fam.size == 2


class TestLineGraph:
    def test_disjoint_edges_give_edgeless(self):
        g = line_graph(Hypergraph(6, [[0, 1], [2, 3], [4, 5]]))
        assert g == Graph(3)

    def test_path_of_overlaps(self):
        g = line_graph(Hypergraph(4, [[0, 1], [1, 2], [2, 3]]))
        assert g.edges == frozenset({(0, 1), (1, 2)})

    def test_duplicate_edges_are_adjacent(self):
        assert line_graph(Hypergraph(1, [[0], [0]])) == complete_graph(2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            line_graph(Hypergraph(3, []))

    def test_matchings_are_independent_sets(self):
        h = Hypergraph(5, [[0, 1], [1, 2], [3], [4], [2, 4]])
        g = line_graph(h)
        masks = h.edge_masks()
        for mask in range(1 << h.num_edges):
            chosen = [i for i in range(h.num_edges) if mask >> i & 1]
            disjoint = all(
                not (masks[i] & masks[j]) for a, i in enumerate(chosen) for j in chosen[a + 1 :]
            )
            independent = all(
                not g.has_edge(i, j) for a, i in enumerate(chosen) for j in chosen[a + 1 :]
            )
            assert disjoint == independent


class TestWidth:
    def test_single_edge(self):
        assert width(Hypergraph(2, [[0]]))[0] == 1

    def test_disjoint_edges(self):
        h = Hypergraph(6, [[0], [1], [2], [3]])
        assert width(h)[0] == 4

    def test_triangle_width_one(self):
        value, witness = width(triangle_hypergraph())
        assert value == 1
        assert len(witness) == 1

    def test_cap(self):
        with pytest.raises(CapExceeded):
            width(Hypergraph(30, [[i] for i in range(25)]))


class TestFractionalWidth:
    def test_single_vertex_edge(self):
        assert fractional_width(Hypergraph(1, [[0]])) == pytest.approx(1.0, abs=1e-9)

    def test_disjoint_singletons(self):
        h = Hypergraph(4, [[0], [1], [2], [3]])
        assert fractional_width(h) == pytest.approx(4.0, abs=1e-7)

    def test_triangle_three_quarters(self):
        h = triangle_hypergraph()
        # uniform 1/4 is feasible: 2*(1/4) + 1/4 + 1/4 = 1 per row
        from flagspectra.hypergraphs import fractional_width_lp

        lp = fractional_width_lp(h)
        uniform = np.full(3, 0.25)
        assert np.allclose(lp.matrix @ uniform, 1.0)
        assert fractional_width(h) == pytest.approx(0.75, abs=1e-7)

    def test_relaxation_below_width_on_corpus(self):
        for label, fam in family_corpus(count=25, seed=9):
            h = fam.union(range(fam.size))
            assert fractional_width(h) <= width(h)[0] + 1e-7, label

    def test_incidence_representation_value_matches(self):
        for label, fam in family_corpus(count=20, seed=11):
            h = fam.union(range(fam.size))
            value = representation_value(incidence_representation(h)).value
            assert value == pytest.approx(fractional_width(h), abs=1e-6), label


class TestSdrSearch:
    def test_disjoint_singletons_found(self):
        fam = HypergraphFamily(2, [Hypergraph(2, [[0]]), Hypergraph(2, [[1]])])
        assert find_sdr(fam) == ((0,), (1,))

    def test_conflicting_singletons_none(self):
        fam = HypergraphFamily(1, [Hypergraph(1, [[0]]), Hypergraph(1, [[0]])])
        assert find_sdr(fam) is None

    def test_empty_member_means_none(self):
        fam = HypergraphFamily(2, [Hypergraph(2, [[0]]), Hypergraph(2, [])])
        assert find_sdr(fam) is None

    def test_planted_families_found(self):
        for seed in range(15):
            fam, plants = planted_sdr_family(seed=700 + seed)
            result = sdr_search(fam)
            assert result.representatives is not None
            masks = []
            for edge in result.representatives:
                m = 0
                for v in edge:
                    m |= 1 << v
                masks.append(m)
            assert all(
                not (masks[i] & masks[j]) for i in range(len(masks)) for j in range(i + 1, len(masks))
            )

    def test_transcript_hash_deterministic(self):
        fam = HypergraphFamily(1, [Hypergraph(1, [[0]]), Hypergraph(1, [[0]])])
        assert sdr_search(fam).transcript_hash == sdr_search(fam).transcript_hash

    def test_family_cap(self):
        members = [Hypergraph(9, [[i]]) for i in range(9)]
        with pytest.raises(CapExceeded):
            find_sdr(HypergraphFamily(9, members))


class TestFractionalWidthCondition:
    def test_disjoint_singletons_hypothesis_holds(self):
        fam = HypergraphFamily(3, [Hypergraph(3, [[0]]), Hypergraph(3, [[1]]), Hypergraph(3, [[2]])])
        records = verify_fractional_width_condition(fam, instance="disjoint")
        final = records[-1]
        assert final.check == "fractional_width_sdr"
        assert final.passed is True
        assert "representatives" in final.detail
        margins = [rec for rec in records if rec.check == "fractional_width_margin"]
        assert len(margins) == 7
        assert all(m.slack == pytest.approx(1.0, abs=1e-7) for m in margins)

    def test_duplicate_singleton_family_borderline(self):
        # the two-member union has fractional width exactly 1 = |I| - 0:
        # margin 0 sits inside the strictness tolerance, so no assertion
        fam = HypergraphFamily(1, [Hypergraph(1, [[0]]), Hypergraph(1, [[0]])])
        records = verify_fractional_width_condition(fam, instance="dup")
        final = records[-1]
        assert final.passed is None
        assert find_sdr(fam) is None

    def test_clear_violation_reported(self):
        # three members sharing one ground vertex: the full union has
        # fractional width 1 < 2, a clear hypothesis failure
        fam = HypergraphFamily(1, [Hypergraph(1, [[0]])] * 3)
        records = verify_fractional_width_condition(fam, instance="triple")
        final = records[-1]
        assert final.passed is True
        assert "hypothesis not satisfied" in final.detail

    def test_corpus_no_counterexamples(self):
        for label, fam in family_corpus(count=40, seed=21):
            records = verify_fractional_width_condition(fam, instance=label)
            assert records[-1].passed is not False, label


class TestIntegralWidthCondition:
    def test_single_member_single_edge(self):
        fam = HypergraphFamily(2, [Hypergraph(2, [[0, 1]])])
        records = verify_integral_width_condition(fam, instance="one")
        final = records[-1]
        assert final.passed is True
        assert "representatives" in final.detail

    def test_separation_from_fractional_condition(self):
        # disjoint singletons: integral width of a union is |I| < 2|I| - 1
        # for |I| >= 2, while the fractional margins all exceed zero
        fam = HypergraphFamily(3, [Hypergraph(3, [[0]]), Hypergraph(3, [[1]]), Hypergraph(3, [[2]])])
        records = compare_width_conditions(fam, instance="sep")
        comparison = records[-1]
        assert comparison.check == "width_condition_comparison"
        assert "separation instance" in comparison.detail
        assert "fractional condition: met" in comparison.detail
        assert "integral condition: not met" in comparison.detail

    def test_corpus_no_counterexamples(self):
        for label, fam in family_corpus(count=40, seed=23):
            records = verify_integral_width_condition(fam, instance=label)
            assert records[-1].passed is not False, label


class TestColorfulSimplices:
    def test_full_simplex_two_classes(self):
        pc = PartitionedComplex(complete_graph(2), [[0], [1]])
        records = verify_colorful_condition(pc, instance="edge")
        assert records[-1].passed is True
        assert "(0, 1)" in records[-1].detail

    def test_two_points_hypothesis_fails(self):
        pc = PartitionedComplex(Graph(2), [[0], [1]])
        records = verify_colorful_condition(pc, instance="points")
        final = records[-1]
        assert final.passed is True
        assert "hypothesis not satisfied" in final.detail
        assert find_colorful_simplex(pc) is None

    def test_line_graph_instantiation_finds_sdr(self):
        # colorful independent sets of the line graph, classes = members:
        # exactly the representative systems of the family
        fam, _ = planted_sdr_family(seed=5, members=3, ground=6)
        union = fam.union(range(fam.size))
        lg = line_graph(union)
        classes = []
        start = 0
        for h in fam.members:
            classes.append(list(range(start, start + h.num_edges)))
            start += h.num_edges
        pc = PartitionedComplex(complement(lg), classes)
        simplex = find_colorful_simplex(pc)
        assert simplex is not None
        masks = union.edge_masks()
        chosen = [masks[i] for i in simplex]
        assert all(not (chosen[i] & chosen[j]) for i in range(3) for j in range(i + 1, 3))

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            PartitionedComplex(complete_graph(2), [[0]])
        with pytest.raises(ValueError):
            PartitionedComplex(complete_graph(2), [[0, 1], [1]])
        with pytest.raises(ValueError):
            PartitionedComplex(complete_graph(2), [[0, 1], []])
