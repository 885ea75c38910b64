"""Fast-path morphology: skeleton, tables, jump-scan erosion, dilation."""
import random

import numpy as np
import pytest

from rlemorph.morphology import (
    EmptyStructuringElementError,
    ErodeTrace,
    build_tables,
    dilate,
    erode,
    erode_check_at,
    generate_skeleton,
)
from rlemorph.oracle import (
    dilate_naive,
    erode_naive,
    erode_runs,
    erosion_transform_naive,
    skeleton_naive,
)
from rlemorph.rle import (
    EMPTY,
    Point,
    Rect,
    RleImage,
    Run,
    bounding_rect,
    complement_within,
    drop_short_runs,
    reflect,
    translate,
    validate,
)

from helpers import random_rle_image, random_se

A = RleImage((Run(-1, 0, 0),))


def img(*runs):
    return RleImage(tuple(Run(*r) for r in runs))


SOLID_5 = img(*[(0, 4, y) for y in range(5)])
SQUARE_3_CENTERED = img((-1, 1, -1), (-1, 1, 0), (-1, 1, 1))


class TestGenerateSkeleton:
    def test_3x3_square_at_corner(self):
        skel = generate_skeleton(img((0, 2, 0), (0, 2, 1), (0, 2, 2)))
        assert skel.anchor_q == Point(2, 0)
        assert skel.entries == (
            (Point(0, 0), 3),
            (Point(0, 1), 3),
            (Point(0, 2), 3),
        )
        assert skel.l_min == skel.l_max == 3

    def test_single_pixel(self):
        skel = generate_skeleton(img((0, 0, 0)))
        assert skel.anchor_q == Point(0, 0)
        assert skel.entries == ((Point(0, 0), 1),)
        assert skel.l_min == skel.l_max == 1

    def test_two_runs(self):
        skel = generate_skeleton(img((0, 4, 0), (1, 2, 1)))
        assert skel.anchor_q == Point(4, 0)
        assert skel.entries == ((Point(0, 0), 5), (Point(-2, 1), 2))
        assert skel.l_min == 2 and skel.l_max == 5

    def test_anchor_tie_break_takes_first_longest(self):
        skel = generate_skeleton(img((0, 2, 0), (5, 7, 0), (0, 2, 1)))
        assert skel.anchor_q == Point(2, 0)

    def test_empty_se_rejected(self):
        with pytest.raises(EmptyStructuringElementError):
            generate_skeleton(EMPTY)

    def test_origin_entry_has_max_depth(self):
        rng = random.Random(10)
        for _ in range(50):
            se = random_se(rng)
            skel = generate_skeleton(se)
            origin_entries = [d for s, d in skel.entries if s == Point(0, 0)]
            assert origin_entries == [skel.l_max]
            assert skel.l_min == min(d for _, d in skel.entries)

    def test_entries_satisfy_skeleton_inequality(self):
        # every entry of the table is a skeleton point of the translated
        # element under the naive transform
        rng = random.Random(11)
        for _ in range(30):
            se = random_se(rng, 7)
            skel = generate_skeleton(se)
            q = skel.anchor_q
            moved = translate(se, Point(-q.x, -q.y))
            naive = skeleton_naive(moved, A)
            f = erosion_transform_naive(moved, A)
            points = {s for s, _ in skel.entries}
            assert points <= naive
            # entry set is exactly the rightmost-of-run points, and depths
            # equal the transform values there
            assert points == {Point(r.rx, r.y) for r in moved.runs}
            for s, depth in skel.entries:
                assert f[s] == depth


class TestBuildTables:
    def test_single_run(self):
        t = build_tables(img((2, 5, 7)), 1, 1)
        row = 7 - t.offset.y
        col = 2 - t.offset.x
        assert t.left[row, col : col + 4].tolist() == [1, 2, 3, 4]
        assert t.right[row, col : col + 4].tolist() == [4, 3, 2, 1]
        assert t.x_cut == img((2, 5, 7))

    def test_short_run_zeroed_and_cut(self):
        t = build_tables(img((0, 9, 0), (0, 1, 1)), 3, 3)
        row1 = 1 - t.offset.y
        assert not t.left[row1].any() and not t.right[row1].any()
        assert t.x_cut == img((2, 9, 0))

    def test_empty_image(self):
        t = build_tables(EMPTY, 2, 3)
        assert t.left.size == 0 and t.right.size == 0 and t.x_cut == EMPTY

    def test_zero_margin(self):
        t = build_tables(img((0, 3, 0)), 1, 1)
        assert not t.left[0].any() and not t.left[-1].any()
        assert not t.left[:, 0].any() and not t.left[:, -1].any()

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            build_tables(SOLID_5, 3, 2)
        with pytest.raises(ValueError):
            build_tables(SOLID_5, 0, 2)

    def test_left_right_sum_invariant(self):
        rng = random.Random(12)
        for _ in range(30):
            x = random_rle_image(rng, 24, 24)
            l_min = rng.randint(1, 4)
            l_max = l_min + rng.randint(0, 3)
            t = build_tables(x, l_min, l_max)
            for run in x.runs:
                row = run.y - t.offset.y
                for i, px in enumerate(range(run.lx, run.rx + 1)):
                    col = px - t.offset.x
                    if run.length >= l_min:
                        assert t.left[row, col] == i + 1
                        assert t.right[row, col] == run.length - i
                        assert (
                            t.left[row, col] + t.right[row, col] == run.length + 1
                        )
                    else:
                        assert t.left[row, col] == 0 and t.right[row, col] == 0

    def test_transform_recurrences(self):
        # left(h) = left(h - (1,0)) + 1 and right(h) = right(h + (1,0)) + 1
        # at every in-run pixel whose neighbour is in the same image
        rng = random.Random(13)
        for _ in range(20):
            x = random_rle_image(rng, 24, 24)
            t = build_tables(x, 1, 1)
            pixels = x.pixel_set()
            for px, py in pixels:
                row = py - t.offset.y
                col = px - t.offset.x
                if (px - 1, py) in pixels:
                    assert t.left[row, col] == t.left[row, col - 1] + 1
                if (px + 1, py) in pixels:
                    assert t.right[row, col] == t.right[row, col + 1] + 1

    def test_x_cut_matches_naive_transform(self):
        # table values agree with the naive erosion transform of the
        # short-run-filtered image
        rng = random.Random(14)
        for _ in range(10):
            x = random_rle_image(rng, 16, 16)
            l_min = rng.randint(1, 3)
            t = build_tables(x, l_min, l_min)
            kept = drop_short_runs(x, l_min)
            if kept.is_empty:
                continue
            f = erosion_transform_naive(kept, A)
            for p, v in f.items():
                assert t.left[p.y - t.offset.y, p.x - t.offset.x] == v


class TestErode:
    def test_solid_5x5_by_centered_3x3(self):
        assert erode(SOLID_5, SQUARE_3_CENTERED) == img(
            (1, 3, 1), (1, 3, 2), (1, 3, 3)
        )

    def test_identity_se(self):
        rng = random.Random(15)
        for _ in range(20):
            x = random_rle_image(rng, 24, 24)
            assert erode(x, img((0, 0, 0))) == x

    def test_interval(self):
        assert erode(img((0, 9, 0)), img((0, 2, 0))) == img((0, 7, 0))

    def test_unsupported_second_row_gives_empty(self):
        assert erode(img((0, 9, 0)), img((0, 2, 0), (0, 2, 1))) == EMPTY

    def test_empty_inputs(self):
        assert erode(EMPTY, SQUARE_3_CENTERED) == EMPTY
        with pytest.raises(EmptyStructuringElementError):
            erode(SOLID_5, EMPTY)

    def test_matches_oracles_randomized(self):
        rng = random.Random(16)
        for _ in range(150):
            x = random_rle_image(rng, 48, 48)
            se = random_se(rng)
            expected = erode_naive(x, se)
            got = erode(x, se)
            validate(got)
            assert got == expected
            assert erode_runs(x, se) == expected

    def test_translation_law(self):
        rng = random.Random(17)
        for _ in range(40):
            x = random_rle_image(rng, 32, 32)
            se = random_se(rng)
            v = Point(rng.randint(-10, 10), rng.randint(-10, 10))
            assert erode(x, translate(se, v)) == translate(
                erode(x, se), Point(-v.x, -v.y)
            )

    def test_short_run_removal_law(self):
        rng = random.Random(18)
        for _ in range(40):
            x = random_rle_image(rng, 32, 32)
            se = random_se(rng)
            l_min = generate_skeleton(se).l_min
            assert erode(x, se) == erode(drop_short_runs(x, l_min), se)

    def test_anti_extensive_with_origin(self):
        rng = random.Random(19)
        for _ in range(30):
            x = random_rle_image(rng, 24, 24)
            se = random_se(rng)
            if Point(0, 0) not in se.pixel_set():
                se = RleImage(tuple(se.runs) + (Run(0, 0, 0),))
                se = RleImage(tuple(sorted(set(se.runs), key=lambda r: (r.y, r.lx))))
                from rlemorph.rle import normalize

                se = normalize(se.runs)
            assert erode(x, se).pixel_set() <= x.pixel_set()


class TestErodeInstrumented:
    def test_candidates_within_x_cut(self):
        rng = random.Random(20)
        for _ in range(40):
            x = random_rle_image(rng, 32, 32)
            se = random_se(rng)
            trace = ErodeTrace()
            erode(x, se, trace)
            skel = generate_skeleton(se)
            cut = build_tables(x, skel.l_min, skel.l_max).x_cut
            cut_pixels = cut.pixel_set()
            assert trace.candidates <= cut.pixel_count()
            assert all(p in cut_pixels for p in trace.candidate_positions)
            # no candidate among the first l_max - 1 pixels of any run
            for px, py in trace.candidate_positions:
                run = next(
                    r for r in x.runs if r.y == py and r.lx <= px <= r.rx
                )
                assert px >= run.lx + skel.l_max - 1

    def test_solid_5x5_candidate_count(self):
        trace = ErodeTrace()
        erode(SOLID_5, img((0, 2, 0), (0, 2, 1), (0, 2, 2)), trace)
        skel = generate_skeleton(img((0, 2, 0), (0, 2, 1), (0, 2, 2)))
        cut = build_tables(SOLID_5, skel.l_min, skel.l_max).x_cut
        assert cut.pixel_count() == 15  # 25 pixels minus (3-1) per surviving row
        assert trace.candidates <= 15

    def test_jump_miss_soundness(self):
        # every position skipped by a jump is a genuine miss
        rng = random.Random(21)
        for _ in range(40):
            x = random_rle_image(rng, 24, 24)
            se = random_se(rng, 7)
            skel = generate_skeleton(se)
            q = skel.anchor_q
            trace = ErodeTrace()
            erode(x, se, trace)
            anchored_hits = erode_naive(
                x, translate(se, Point(-q.x, -q.y))
            ).pixel_set()
            for jx, jy, k in trace.jumps:
                for i in range(k):
                    assert (jx + i, jy) not in anchored_hits

    def test_jump_hit_maximality(self):
        # the pixel immediately after an emitted run is a miss
        rng = random.Random(22)
        for _ in range(40):
            x = random_rle_image(rng, 24, 24)
            se = random_se(rng, 7)
            skel = generate_skeleton(se)
            q = skel.anchor_q
            trace = ErodeTrace()
            erode(x, se, trace)
            anchored_hits = erode_naive(
                x, translate(se, Point(-q.x, -q.y))
            ).pixel_set()
            for hx, hy, n in trace.hits:
                assert all((hx + i, hy) in anchored_hits for i in range(n))
                assert (hx + n, hy) not in anchored_hits

    def test_probe_count_bound(self):
        rng = random.Random(23)
        for _ in range(40):
            x = random_rle_image(rng, 32, 32)
            se = random_se(rng)
            skel = generate_skeleton(se)
            cut = build_tables(x, skel.l_min, skel.l_max).x_cut
            trace = ErodeTrace()
            erode(x, se, trace)
            assert trace.probes <= cut.pixel_count() * len(skel.entries)


class TestErodeCheckAt:
    def test_solid_case(self):
        se = img((0, 2, 0), (0, 2, 1), (0, 2, 2))
        skel = generate_skeleton(se)
        tables = build_tables(SOLID_5, skel.l_min, skel.l_max)
        assert erode_check_at(tables, skel, Point(4, 1))
        assert not erode_check_at(tables, skel, Point(0, 0))

    def test_outside_probe_is_false(self):
        se = img((0, 2, 0))
        skel = generate_skeleton(se)
        tables = build_tables(SOLID_5, skel.l_min, skel.l_max)
        assert not erode_check_at(tables, skel, Point(50, 50))

    def test_single_pixel_se_membership(self):
        se = img((0, 0, 0))
        skel = generate_skeleton(se)
        rng = random.Random(24)
        for _ in range(10):
            x = random_rle_image(rng, 16, 16)
            tables = build_tables(x, 1, 1)
            pixels = x.pixel_set()
            for _ in range(20):
                h = Point(rng.randint(-10, 20), rng.randint(-10, 20))
                assert erode_check_at(tables, skel, h) == (h in pixels)

    def test_equivalent_to_subset_test(self):
        rng = random.Random(25)
        for _ in range(30):
            x = random_rle_image(rng, 20, 20)
            se = random_se(rng, 6)
            skel = generate_skeleton(se)
            q = skel.anchor_q
            tables = build_tables(x, skel.l_min, skel.l_max)
            anchored = translate(se, Point(-q.x, -q.y))
            kept = drop_short_runs(x, skel.l_min).pixel_set()
            for _ in range(10):
                h = Point(rng.randint(-12, 24), rng.randint(-12, 24))
                fits = all(
                    (h.x + p.x, h.y + p.y) in kept for p in anchored.pixels()
                )
                assert erode_check_at(tables, skel, h) == fits


class TestDilate:
    def test_single_pixel_by_centered_3x3(self):
        assert dilate(img((0, 0, 0)), SQUARE_3_CENTERED) == SQUARE_3_CENTERED

    def test_two_pixels(self):
        assert dilate(img((0, 0, 0), (4, 4, 0)), img((0, 1, 0))) == img(
            (0, 1, 0), (4, 5, 0)
        )

    def test_identity_se(self):
        rng = random.Random(26)
        for _ in range(20):
            x = random_rle_image(rng, 24, 24)
            assert dilate(x, img((0, 0, 0))) == x

    def test_empty_inputs(self):
        assert dilate(EMPTY, SQUARE_3_CENTERED) == EMPTY
        with pytest.raises(EmptyStructuringElementError):
            dilate(SOLID_5, EMPTY)

    def test_matches_oracle_randomized(self):
        rng = random.Random(27)
        for _ in range(150):
            x = random_rle_image(rng, 48, 48)
            se = random_se(rng)
            got = dilate(x, se)
            validate(got)
            assert got == dilate_naive(x, se)

    def test_se_far_from_origin(self):
        # dilation commutes with SE translation
        rng = random.Random(28)
        for _ in range(20):
            x = random_rle_image(rng, 24, 24)
            se = random_se(rng)
            v = Point(rng.randint(-60, 60), rng.randint(-60, 60))
            moved = translate(se, v)
            assert dilate(x, moved) == translate(dilate(x, se), v)

    def test_extensive_with_origin(self):
        rng = random.Random(29)
        for _ in range(30):
            x = random_rle_image(rng, 24, 24)
            from rlemorph.rle import normalize

            se = normalize(tuple(random_se(rng).runs) + (Run(0, 0, 0),))
            assert x.pixel_set() <= dilate(x, se).pixel_set()

    def test_matches_complement_construction(self):
        # for elements whose box straddles the origin the plain
        # complement-erode-complement assembly gives the same answer
        rng = random.Random(30)
        for _ in range(30):
            x = random_rle_image(rng, 24, 24)
            se = random_se(rng)
            sb = bounding_rect(se)
            if not (sb.l <= 0 <= sb.r and sb.t <= 0 <= sb.b):
                continue
            rb = bounding_rect(x)
            if rb is None:
                continue
            rec_dil = rb.grown(sb.width, sb.height)
            rec_ero = rb.grown(2 * sb.width, 2 * sb.height)
            manual = complement_within(
                erode(complement_within(x, rec_ero), reflect(se)), rec_dil
            )
            assert dilate(x, se) == manual
