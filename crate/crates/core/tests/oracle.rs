mod common;

use bicyclic::kernel::{tail_shift_intersect, Tail};
use bicyclic::{Element, Family, KernelError, F2};
use common::{closure_witness, f2_mul, oracle_mul, window};

fn e(i: i64, j: i64, f: usize) -> Element {
    Element::new(i, j, f)
}

#[test]
fn product_matches_set_oracle_on_window_3() {
    let w = window(3, 2);
    for &x in &w {
        for &y in &w {
            assert_eq!(F2.mul(x, y).unwrap(), f2_mul(x, y), "{x} · {y}");
        }
    }
}

#[test]
fn product_matches_set_oracle_for_wider_families() {
    for starts in [vec![0, 1, 2], vec![2, 3, 4, 5], vec![0]] {
        let family = Family::new(starts.clone()).unwrap();
        let w = window(2, starts.len());
        for &x in &w {
            for &y in &w {
                assert_eq!(family.mul(x, y).unwrap(), oracle_mul(&starts, x, y));
            }
        }
    }
}

#[test]
fn frozen_products() {
    // Values from the set oracle, frozen so a regression in either side shows.
    let cases = [
        (e(2, 5, 0), e(3, 1, 1), e(2, 3, 0)),
        (e(0, 0, 0), e(0, 0, 1), e(0, 0, 1)),
        (e(0, 1, 0), e(0, 0, 1), e(0, 1, 0)),
        (e(0, 2, 0), e(2, 2, 1), e(0, 2, 1)),
        (e(-1, 0, 0), e(0, -3, 1), e(-1, -3, 1)),
        (e(1, 0, 1), e(3, 2, 0), e(4, 2, 0)),
        (e(-2, 3, 1), e(-1, 4, 0), e(-2, 8, 1)),
    ];
    for (x, y, z) in cases {
        assert_eq!(f2_mul(x, y), z, "oracle {x} · {y}");
        assert_eq!(F2.mul(x, y).unwrap(), z, "kernel {x} · {y}");
    }
}

#[test]
fn shifted_intersections_match_sets() {
    for c in -6..=6 {
        for a in 0..6 {
            for b in 0..6 {
                let set: Vec<i64> = (0..60)
                    .filter(|v| *v - c >= i64::from(a) && *v >= i64::from(b))
                    .collect();
                let got = tail_shift_intersect(c, Tail::new(a), Tail::new(b)).unwrap();
                assert_eq!(i64::from(got.start()), set[0]);
            }
        }
    }
}

#[test]
fn family_validation_matches_closure_oracle() {
    for mask in 1u32..64 {
        let starts: Vec<u32> = (0..6).filter(|b| mask & (1 << b) != 0).collect();
        match (Family::new(starts.clone()), closure_witness(&starts)) {
            (Ok(_), None) => {}
            (
                Err(KernelError::NotOmegaClosed {
                    left,
                    right,
                    shift,
                    result,
                }),
                Some(_),
            ) => {
                assert!(starts.contains(&left.start()) && starts.contains(&right.start()));
                assert!(!starts.contains(&result.start()));
                let meet = (0..200u32)
                    .find(|v| *v >= left.start() && v + shift >= right.start())
                    .unwrap();
                assert_eq!(meet, result.start(), "{starts:?}");
            }
            (got, oracle) => panic!("{starts:?}: kernel {got:?}, oracle {oracle:?}"),
        }
    }
}
