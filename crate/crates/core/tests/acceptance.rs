//! Acceptance gate. One test per criterion; each writes a single PASS/FAIL
//! line to stderr (not captured by the harness) and then asserts.
//!
//! Every comparison is exact: rational or integer equality, tolerance 0.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use weightcalc::charclass::{
    by_degree, chern2_closed, chern_classes, swc_restrict, total_swc_factorization,
    CharacterLattice, Rep,
};
use weightcalc::linalg::{binomial, q, qfrac, Q};
use weightcalc::oracle::{
    character_at_order2, oracle_elementary, oracle_power_sum, schur_at_signs, weight_multiplicities,
};
use weightcalc::polyalg::{BiPoly, Mod2Poly};
use weightcalc::powersum::{bernoulli_poly_at, power_sums, symbolic_power_sums};
use weightcalc::rootsys::{build_root_system, supported, Kind, RootSystem, WeightVector};
use weightcalc::weylsum::{a2_cubics, d_product, fk_direct, q2, q2_vee, FkTable};

/// Exact arithmetic throughout; the only admissible difference is zero.
const TOLERANCE: i64 = 0;
/// Oracle dimension guard for the grids below (B3 at (3,3,3) has dimension 262144).
const GRID_MAX_DIM: u64 = 1_000_000;
const SWC_K: usize = 6;

fn report(n: u32, name: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {n:>2} [{status}] {name} (tolerance {TOLERANCE})");
    if !failures.is_empty() {
        let shown: Vec<&str> = failures.iter().take(6).map(String::as_str).collect();
        line.push_str(&format!(
            ": {} failure(s): {}",
            failures.len(),
            shown.join("; ")
        ));
    }
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(failures.is_empty(), "{line}");
}

fn rs(kind: Kind, rank: usize) -> RootSystem {
    build_root_system(kind, rank).unwrap()
}

fn y(i: usize, n: usize) -> BiPoly {
    BiPoly::y_var(0, n, i)
}

/// Dominant weights with every coordinate in `0..=bound`.
fn grid(rank: usize, bound: i64) -> Vec<WeightVector> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeightVector).collect()
}

fn small_types() -> Vec<(Kind, usize)> {
    supported().into_iter().filter(|&(_, r)| r <= 3).collect()
}

fn grid_points() -> Vec<(Kind, usize, WeightVector)> {
    small_types()
        .into_iter()
        .flat_map(|(k, r)| grid(r, 3).into_iter().map(move |l| (k, r, l)))
        .collect()
}

#[test]
fn criterion_01_sl3_f_table() {
    let a2 = rs(Kind::A, 2);
    let (q3, q3v) = a2_cubics(&a2).unwrap();
    let (q2, q2v) = (q2(&a2), q2_vee(&a2));
    let f3 = fk_direct(&a2, 3).unwrap();
    let pq = &q2 * &q2v;
    let cq = &q3 * &q3v;
    let bracket = &(&pq.pow(3).scale(&q(85))
        - &(&(&q2.pow(3) * &q3v.pow(2)) + &(&q3.pow(2) * &q2v.pow(3))))
        + &cq.pow(2);
    let expected: Vec<(usize, BiPoly)> = vec![
        (3, d_product(&a2).scale(&q(3))),
        (4, BiPoly::zero(2, 2)),
        (5, (&pq * &f3).scale(&qfrac(5, 4))),
        (6, (&cq * &f3).scale(&qfrac(1, 8))),
        (7, (&pq.pow(2) * &f3).scale(&qfrac(21, 16))),
        (8, (&(&pq * &cq) * &f3).scale(&qfrac(1, 4))),
        (9, (&bracket * &f3).scale(&qfrac(1, 64))),
    ];
    let failures: Vec<String> = expected
        .par_iter()
        .filter_map(|(k, e)| {
            let f = fk_direct(&a2, *k).unwrap();
            (f != *e).then(|| format!("F_{k} differs by {}", (&f - e).to_text()))
        })
        .collect();
    report(1, "A2 relations F_3..F_9", &failures);
}

#[test]
fn criterion_02_sl2_bernoulli() {
    let a1 = rs(Kind::A, 1);
    let mut failures = vec![];
    for l in 0..=20i64 {
        let p = power_sums(&a1, &WeightVector(vec![l]), 8).unwrap().p;
        for k in (0..=8usize).step_by(2) {
            let x = Q::new(BigInt::from(l + 2), BigInt::from(2));
            let c = Q::from_integer(BigInt::from(2).pow(k as u32 + 1)) / q(k as i64 + 1)
                * bernoulli_poly_at(k + 1, &x);
            let expect = y(0, 1).pow(k as u32).scale(&c);
            if p[k] != expect {
                failures.push(format!("l={l} k={k}: got {}", p[k].to_text()));
            }
        }
    }
    report(2, "A1 power sums follow the Bernoulli law", &failures);
}

#[test]
fn criterion_03_adjoint_identity() {
    let types = [
        (Kind::A, 1),
        (Kind::A, 2),
        (Kind::A, 3),
        (Kind::B, 2),
        (Kind::B, 3),
        (Kind::C, 3),
        (Kind::D, 4),
        (Kind::G2, 2),
    ];
    let failures: Vec<String> = types
        .par_iter()
        .filter_map(|&(k, r)| {
            let s = rs(k, r);
            let p2 = power_sums(&s, &s.highest_root(), 2)
                .unwrap()
                .p
                .swap_remove(2);
            let want = q2(&s).y_only().unwrap();
            (p2 != want).then(|| format!("{}: {} vs {}", s.name(), p2.to_text(), want.to_text()))
        })
        .collect();
    report(3, "P_2(ad) = q_2", &failures);
}

#[test]
fn criterion_04_strange_formula() {
    let failures: Vec<String> = supported()
        .into_iter()
        .filter_map(|(k, r)| {
            let s = rs(k, r);
            let v = q2_vee(&s).eval_mu(&s.delta).constant_term() * q(24);
            (v != q(s.dim_g as i64)).then(|| format!("{}: 24 q2v(delta) = {v}", s.name()))
        })
        .collect();
    report(
        4,
        "24 q2v(delta) = dim g for every supported type",
        &failures,
    );
}

#[test]
fn criterion_05_oracle_grid() {
    let failures: Vec<String> = grid_points()
        .par_iter()
        .filter_map(|(k, r, lambda)| {
            let s = rs(*k, *r);
            let res = power_sums(&s, lambda, 6).unwrap();
            let wm = weight_multiplicities(&s, lambda, GRID_MAX_DIM).unwrap();
            let bad_p: Vec<usize> = (0..=6)
                .filter(|&j| res.p[j] != oracle_power_sum(&wm, j))
                .collect();
            let e_ok = res.e == oracle_elementary(&wm, 6);
            (!bad_p.is_empty() || !e_ok).then(|| {
                format!(
                    "{}{:?}: P differs at {bad_p:?}, E equal = {e_ok}",
                    s.name(),
                    lambda.0
                )
            })
        })
        .collect();
    report(
        5,
        "power sums and elementary functions equal the oracle",
        &failures,
    );
}

#[test]
fn criterion_06_degree_bounds() {
    let mut failures = vec![];
    for (k, r) in [(Kind::A, 1), (Kind::A, 2), (Kind::B, 2)] {
        let s = rs(k, r);
        let n = s.n_pos as u32;
        let mut table = FkTable::new(&s, 10);
        let res = symbolic_power_sums(&s, &mut table, 6).unwrap();
        for j in 0..=6u32 {
            let (p, e) = (&res.p[j as usize], &res.e[j as usize]);
            if p.a_degree() > n + j {
                failures.push(format!("{} deg P_{j} = {}", s.name(), p.a_degree()));
            }
            if e.a_degree() > (j / 2) * n + j {
                failures.push(format!("{} deg E_{j} = {}", s.name(), e.a_degree()));
            }
            if s.minus_one_in_w && j % 2 == 1 && !p.is_zero() {
                failures.push(format!("{} P_{j} is nonzero", s.name()));
            }
        }
    }
    report(6, "symbolic degree bounds and odd vanishing", &failures);
}

fn gl2_c2(m: i64, n: i64) -> BiPoly {
    let d = m - n;
    let b = Q::from_integer(binomial(d + 2, 3));
    let base = q((d + 1) * d * (m + n) * (m + n));
    let sq = &base / q(8) - &b / q(4);
    let mixed = &base / q(4) + &b / q(2);
    (&y(0, 2).pow(2) + &y(1, 2).pow(2)).scale(&sq) + (&y(0, 2) * &y(1, 2)).scale(&mixed)
}

#[test]
fn criterion_07_chern_golden() {
    let mut failures = vec![];
    let sl2 = CharacterLattice::builtin("SL2").unwrap();
    let pgl2 = CharacterLattice::builtin("PGL2").unwrap();
    let gl2 = CharacterLattice::builtin("GL2").unwrap();
    for l in 0..=20i64 {
        let b3 = Q::from_integer(binomial(l + 2, 3));
        let c = chern_classes(&sl2, &[l], 2).unwrap().c;
        if c[2] != y(0, 1).pow(2).scale(&-b3.clone()) {
            failures.push(format!("SL2 l={l}: c2 = {}", c[2].to_text()));
        }
        if l % 2 == 0 {
            let c = chern_classes(&pgl2, &[l], 4).unwrap().c;
            let c4 = Q::from_integer(binomial(l + 2, 5) * (5 * l + 12)) / q(48);
            if c[2] != y(0, 1).pow(2).scale(&(-b3 / q(4))) {
                failures.push(format!("PGL2 l={l}: c2 = {}", c[2].to_text()));
            }
            if c[4] != y(0, 1).pow(4).scale(&c4) {
                failures.push(format!("PGL2 l={l}: c4 = {}", c[4].to_text()));
            }
        }
    }
    for m in 0..=5i64 {
        for n in 0..=m {
            let c = chern_classes(&gl2, &[m, n], 2).unwrap().c;
            let c1 = (&y(0, 2) + &y(1, 2)).scale(&qfrac((m - n + 1) * (m + n), 2));
            if c[1] != c1 || c[2] != gl2_c2(m, n) {
                failures.push(format!(
                    "GL2 ({m},{n}): c1 = {}, c2 = {}",
                    c[1].to_text(),
                    c[2].to_text()
                ));
            }
        }
    }
    let closed: Vec<String> = grid_points()
        .par_iter()
        .filter_map(|(k, r, lambda)| {
            let s = rs(*k, *r);
            let lat = CharacterLattice::builtin(&format!("SC-{}", s.name())).unwrap();
            let c2 = chern_classes(&lat, &lambda.0, 2).unwrap().c.swap_remove(2);
            (chern2_closed(&lat, &lambda.0).unwrap() != c2)
                .then(|| format!("closed c2 differs for {}{:?}", s.name(), lambda.0))
        })
        .collect();
    failures.extend(closed);
    report(7, "Chern class golden values and the closed c_2", &failures);
}

#[test]
fn criterion_08_swc_golden() {
    let mut failures = vec![];
    let pgl2 = CharacterLattice::builtin("PGL2").unwrap();
    let sl2 = CharacterLattice::builtin("SL2").unwrap();
    let v = |e: u64| Mod2Poly::var(1, 0).pow_trunc(e, 8);
    for l in (0..=32i64).step_by(2) {
        let w = swc_restrict(&pgl2, &Rep::irreducible(&[l]), 4).unwrap().w;
        let w2 = if matches!(l % 8, 2 | 4) {
            v(2)
        } else {
            Mod2Poly::zero(1)
        };
        let w4 = if matches!(l % 16, 6 | 8 | 10 | 12) {
            v(4)
        } else {
            Mod2Poly::zero(1)
        };
        if w[2] != w2 || w[4] != w4 {
            failures.push(format!(
                "PGL2 l={l}: w2 = {}, w4 = {}",
                w[2].to_text(),
                w[4].to_text()
            ));
        }
    }
    for l in (0..=20i64).step_by(2) {
        let w = swc_restrict(&sl2, &Rep::irreducible(&[l]), 4).unwrap().w;
        if !w[2].is_zero() || !w[4].is_zero() {
            failures.push(format!(
                "SL2 l={l}: w2 = {}, w4 = {}",
                w[2].to_text(),
                w[4].to_text()
            ));
        }
    }
    let w = swc_restrict(&sl2, &Rep::hyperbolic(&[1]), 4).unwrap().w;
    if w[4] != v(4) {
        failures.push(format!("SL2 S(pi_1): w4 = {}", w[4].to_text()));
    }
    let sl3 = CharacterLattice::builtin("SL3").unwrap();
    let w = swc_restrict(&sl3, &Rep::irreducible(&[1, 1]), 4).unwrap().w;
    let want = {
        let (a, b) = (Mod2Poly::var(2, 0), Mod2Poly::var(2, 1));
        a.pow_trunc(4, 4)
            .add(&b.pow_trunc(4, 4))
            .add(&a.pow_trunc(2, 4).mul(&b.pow_trunc(2, 4)))
    };
    if w[4] != want {
        failures.push(format!("SL3 adjoint: w4 = {}", w[4].to_text()));
    }
    report(8, "Stiefel-Whitney golden values", &failures);
}

#[test]
fn criterion_09_factorization() {
    let mut cases: Vec<(&str, Rep)> = vec![];
    for l in 0..=10 {
        let pi = if l % 2 == 0 {
            Rep::irreducible(&[l])
        } else {
            Rep::hyperbolic(&[l])
        };
        cases.push(("SL2", pi));
    }
    for m in 0..=4 {
        for n in 0..=4 {
            if m == n {
                cases.push(("SL3", Rep::irreducible(&[m, n])));
            }
            cases.push(("SL3", Rep::hyperbolic(&[m, n])));
        }
    }
    for n in 5..=6 {
        cases.push(("SL3", Rep::irreducible(&[n, n])));
    }
    cases.push(("Sp4", Rep::irreducible(&[2, 0])));
    let failures: Vec<String> = cases
        .par_iter()
        .flat_map_iter(|(group, pi)| {
            let lat = CharacterLattice::builtin(group).unwrap();
            let f = total_swc_factorization(&lat, pi, SWC_K, GRID_MAX_DIM).unwrap();
            let w = swc_restrict(&lat, pi, SWC_K).unwrap().w;
            let tag = format!(
                "{group} {}{:?}",
                if pi.hyperbolic { "S" } else { "" },
                pi.weight
            );
            let mut out = vec![];
            if by_degree(&f.w, SWC_K) != w {
                out.push(format!("{tag}: expansion {} differs", f.w.to_text()));
            }
            if f.m.iter().any(|m| m % 2 != BigInt::zero()) {
                out.push(format!("{tag}: odd exponent in {:?}", f.m));
            }
            let (a, b) = (
                pi.weight.first().copied().unwrap_or(0),
                pi.weight.last().copied().unwrap_or(0),
            );
            if *group == "SL3" && !pi.hyperbolic {
                let n = a;
                let want = if n % 2 == 1 {
                    (n + 1).pow(3) / 4
                } else {
                    n * (n + 1) * (n + 2) / 4
                };
                if f.m[0].to_i64() != Some(want) {
                    out.push(format!(
                        "{tag}: m = {} but the two-case formula gives {want}",
                        f.m[0]
                    ));
                }
            }
            if *group == "SL3" && pi.hyperbolic {
                let four = match (a % 2, b % 2) {
                    (1, 1) => (a + 1) * (b + 1) * (a + b + 2),
                    (1, 0) => (a + 1) * ((b + 1) * (a + b + 2) + 1),
                    (0, 1) => (b + 1) * ((a + 1) * (a + b + 2) + 1),
                    _ => (a + b + 2) * ((a + 1) * (b + 1) - 1),
                };
                if f.m[0].to_i64() != Some(four / 4) {
                    out.push(format!(
                        "{tag}: m = {} but the four-case formula gives {}/4",
                        f.m[0], four
                    ));
                }
            }
            out
        })
        .collect();
    report(
        9,
        "total SWC factorization matches direct restriction",
        &failures,
    );
}

#[test]
fn criterion_10_h_law() {
    let mut failures = vec![];
    for p in 0..=20i64 {
        let ones = schur_at_signs(&[p], 0, 3).unwrap();
        if ones != binomial(p + 2, 2) {
            failures.push(format!("H_{p}(1,1,1) = {ones}"));
        }
        let signs = schur_at_signs(&[p], 2, 1).unwrap();
        if signs != BigInt::from(p / 2 + 1) {
            failures.push(format!(
                "H_{p}(-1,-1,1) = {signs}, stated law gives {}",
                p / 2 + 1
            ));
        }
    }
    for n in [3usize, 4] {
        let lat = CharacterLattice::builtin(&format!("SL{n}")).unwrap();
        for part in grid(n - 1, 6) {
            // parts <= 6 with the last part zero, as partitions of length < n
            let mut parts: Vec<i64> = part.0.clone();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts.push(0);
            if parts != {
                let mut p = part.0.clone();
                p.push(0);
                p
            } {
                continue;
            }
            let lambda: Vec<i64> = parts.windows(2).map(|w| w[0] - w[1]).collect();
            let wm = weight_multiplicities(&lat.rs, &WeightVector(lambda.clone()), GRID_MAX_DIM)
                .unwrap();
            for i in 0..n {
                let minus = i + i % 2;
                let chi = character_at_order2(&wm, &lat.b_signs(i), |mu| lat.weight_coords(mu, 0))
                    .unwrap();
                let s = schur_at_signs(&parts, minus, n - minus).unwrap();
                if chi != s {
                    failures.push(format!("SL{n} {parts:?} at b_{i}: {chi} vs {s}"));
                }
            }
        }
    }
    report(
        10,
        "H_p values and Schur evaluations at sign vectors",
        &failures,
    );
}

#[test]
fn criterion_11_typo_adjudication() {
    let a1 = rs(Kind::A, 1);
    let wm = weight_multiplicities(&a1, &WeightVector(vec![4]), GRID_MAX_DIM).unwrap();
    let e4 = oracle_elementary(&wm, 4).swap_remove(4);
    let with_12 = Q::from_integer(binomial(6, 5) * 32) / q(3);
    let with_2 = Q::from_integer(binomial(6, 5) * 22) / q(3);
    let mut failures = vec![];
    if e4 != y(0, 1).pow(4).scale(&q(64)) || with_12 != q(64) {
        failures.push(format!(
            "oracle E_4 = {}, (5l+12) form gives {with_12}",
            e4.to_text()
        ));
    }
    // The "(5l+2)" variant gives 44 at l = 4 and is inconsistent with the oracle.
    if e4 == y(0, 1).pow(4).scale(&with_2) {
        failures.push("oracle agrees with the (5l+2) variant".into());
    }
    let p = power_sums(&a1, &WeightVector(vec![4]), 4)
        .unwrap()
        .e
        .swap_remove(4);
    if p != e4 {
        failures.push(format!("power-sum route gives {}", p.to_text()));
    }
    report(
        11,
        "E_4 at l = 4 is 64, confirming (5l+12) over (5l+2)",
        &failures,
    );
}

#[test]
fn criterion_12_triviality() {
    let failures: Vec<String> = grid_points()
        .par_iter()
        .filter_map(|(k, r, lambda)| {
            let s = rs(*k, *r);
            let trivial = lambda.0.iter().all(|&c| c == 0);
            let p = power_sums(&s, lambda, 6).unwrap().p;
            let lat = CharacterLattice::builtin(&format!("SC-{}", s.name())).unwrap();
            let c2 = chern_classes(&lat, &lambda.0, 2).unwrap().c.swap_remove(2);
            let p_ok = [2, 4, 6].iter().all(|&j| p[j].is_zero() == trivial);
            (!p_ok || c2.is_zero() != trivial).then(|| format!("{}{:?}", s.name(), lambda.0))
        })
        .collect();
    report(
        12,
        "P_even and c_2 vanish exactly for the trivial weight",
        &failures,
    );
}
