//! Classical root systems and their Weyl groups.
//!
//! Weights live in the fundamental-weight basis and elements of the Cartan
//! subalgebra in the simple-coroot basis, so the pairing between them is the
//! plain coordinate dot product. Labels follow Bourbaki numbering; the Cartan
//! matrix is derived from the standard Euclidean realization of the simple
//! roots, with `cartan[i][j] = <alpha_i, alpha_j^vee>`. Row `i` of the Cartan
//! matrix is therefore the simple root `alpha_i` in weight coordinates.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, QMatrix, Q};

/// Largest Weyl group we are willing to enumerate.
pub const WEYL_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    G2,
}

impl Kind {
    pub fn parse(s: &str) -> Option<(Kind, Option<usize>)> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("g2") {
            return Some((Kind::G2, Some(2)));
        }
        let mut chars = s.chars();
        let kind = match chars.next()?.to_ascii_uppercase() {
            'A' => Kind::A,
            'B' => Kind::B,
            'C' => Kind::C,
            'D' => Kind::D,
            'G' => Kind::G2,
            _ => return None,
        };
        let rest: String = chars.collect();
        if rest.is_empty() {
            Some((kind, None))
        } else {
            rest.parse().ok().map(|r| (kind, Some(r)))
        }
    }

    pub fn supports(self, rank: usize) -> bool {
        match self {
            Kind::A => (1..=6).contains(&rank),
            Kind::B | Kind::C => (2..=6).contains(&rank),
            Kind::D => (3..=6).contains(&rank),
            Kind::G2 => rank == 2,
        }
    }
}

pub const SUPPORT_TABLE: &str = "A1-A6, B2-B6, C2-C6, D3-D6, G2";

/// Every supported (kind, rank) pair.
pub fn supported() -> Vec<(Kind, usize)> {
    let mut out = vec![];
    for kind in [Kind::A, Kind::B, Kind::C, Kind::D] {
        for r in 1..=6 {
            if kind.supports(r) {
                out.push((kind, r));
            }
        }
    }
    out.push((Kind::G2, 2));
    out
}

/// Integral weight, coordinates in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> WeightVector {
        self.scale(-1)
    }

    /// Pairing with a coweight given in simple-coroot coordinates.
    pub fn pair(&self, nu: &CoweightVector) -> Q {
        self.0.iter().zip(&nu.0).map(|(&a, b)| q(a) * b).sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the Cartan subalgebra, coordinates in the simple-coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoweightVector(pub Vec<Q>);

impl CoweightVector {
    pub fn from_ints(v: &[i64]) -> Self {
        CoweightVector(v.iter().map(|&x| q(x)).collect())
    }
}

/// A Weyl group element acting on weight coordinates (as column vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    rank: usize,
    /// Row-major action on weight coordinates.
    matrix: Vec<i64>,
    /// Row-major action on coroot coordinates (inverse transpose of `matrix`).
    dual: Vec<i64>,
    pub sign: i8,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    pub fn dual_entry(&self, i: usize, j: usize) -> i64 {
        self.dual[i * self.rank + j]
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank).map(|c| c.to_vec()).collect()
    }

    pub fn dual_matrix(&self) -> Vec<Vec<i64>> {
        self.dual.chunks(self.rank).map(|c| c.to_vec()).collect()
    }

    pub fn act(&self, mu: &WeightVector) -> WeightVector {
        act_raw(&self.matrix, self.rank, &mu.0)
    }

    pub fn act_coweight(&self, nu: &CoweightVector) -> CoweightVector {
        let r = self.rank;
        CoweightVector(
            (0..r)
                .map(|i| (0..r).map(|j| q(self.dual[i * r + j]) * &nu.0[j]).sum())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| self.matrix[i * r + j] == i64::from(i == j)))
    }
}

fn act_raw(m: &[i64], r: usize, v: &[i64]) -> WeightVector {
    WeightVector(
        (0..r)
            .map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum())
            .collect(),
    )
}

fn matmul_i(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    out[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    out
}

fn transpose_i(a: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for j in 0..r {
            out[j * r + i] = a[i * r + j];
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: Kind,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<WeightVector>,
    /// Positive roots in simple-root coordinates, same order as `positive_roots`.
    pub positive_roots_simple: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates, same order.
    pub positive_coroots: Vec<Vec<i64>>,
    pub delta: WeightVector,
    pub n_pos: usize,
    pub dim_g: usize,
    pub weyl: Vec<WeylElement>,
    pub killing: QMatrix,
    pub killing_dual: QMatrix,
    pub minus_one_in_w: bool,
    /// Euclidean realization of the simple roots (rows).
    pub realization: QMatrix,
    /// Index of the longest element in `weyl`.
    longest: usize,
    cartan_inverse: QMatrix,
}

fn realization(kind: Kind, rank: usize) -> Vec<Vec<i64>> {
    let unit = |n: usize, i: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let diff = |n: usize, i: usize, j: usize| -> Vec<i64> {
        let mut v = unit(n, i);
        v[j] -= 1;
        v
    };
    match kind {
        Kind::A => (0..rank).map(|i| diff(rank + 1, i, i + 1)).collect(),
        Kind::B => {
            let mut rows: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            rows.push(unit(rank, rank - 1));
            rows
        }
        Kind::C => {
            let mut rows: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            let mut last = unit(rank, rank - 1);
            last[rank - 1] = 2;
            rows.push(last);
            rows
        }
        Kind::D => {
            let mut rows: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
            let mut last = vec![0; rank];
            last[rank - 2] = 1;
            last[rank - 1] = 1;
            rows.push(last);
            rows
        }
        Kind::G2 => vec![vec![1, -1, 0], vec![-2, 1, 1]],
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn build_root_system(kind: Kind, rank: usize) -> Result<RootSystem> {
    if !kind.supports(rank) {
        return Err(Error::Config(format!(
            "unsupported root system {kind:?}{rank}; supported: {SUPPORT_TABLE}"
        )));
    }
    let real = realization(kind, rank);
    let gram: Vec<Vec<i64>> = real
        .iter()
        .map(|a| real.iter().map(|b| dot(a, b)).collect())
        .collect();
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let num = 2 * gram[i][j];
            if num % gram[j][j] != 0 {
                return Err(Error::Invariant("non-integral Cartan entry".into()));
            }
            cartan[i][j] = num / gram[j][j];
        }
    }

    // Roots by closure of the simple roots under simple reflections, in
    // simple-root coordinates. s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
    let pair_coroot = |beta: &[i64], i: usize| -> i64 {
        beta.iter().enumerate().map(|(j, c)| c * cartan[j][i]).sum()
    };
    let mut roots: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        roots.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let p = pair_coroot(&beta, i);
            let mut b = beta.clone();
            b[i] -= p;
            if roots.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = roots
        .into_iter()
        .filter(|b| b.iter().all(|&c| c >= 0))
        .collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let n_pos = positive.len();

    let to_weight = |c: &[i64]| -> WeightVector {
        WeightVector(
            (0..rank)
                .map(|j| (0..rank).map(|i| c[i] * cartan[i][j]).sum())
                .collect(),
        )
    };
    let positive_roots: Vec<WeightVector> = positive.iter().map(|c| to_weight(c)).collect();

    // Coroot of alpha = sum c_j alpha_j: coefficients c_j |alpha_j|^2 / |alpha|^2.
    let mut positive_coroots = Vec::with_capacity(n_pos);
    for c in &positive {
        let len2: i64 = (0..rank)
            .map(|i| (0..rank).map(|j| c[i] * c[j] * gram[i][j]).sum::<i64>())
            .sum();
        let cv: Vec<i64> = (0..rank)
            .map(|j| {
                let num = c[j] * gram[j][j];
                debug_assert_eq!(num % len2, 0);
                num / len2
            })
            .collect();
        positive_coroots.push(cv);
    }

    let weyl = enumerate_weyl(&cartan, rank)?;
    let longest = weyl
        .iter()
        .enumerate()
        .max_by_key(|(_, w)| w.1)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let weyl: Vec<WeylElement> = weyl.into_iter().map(|(w, _)| w).collect();
    let minus_one_in_w = weyl.iter().any(|w| {
        (0..rank).all(|i| (0..rank).all(|j| w.entry(i, j) == if i == j { -1 } else { 0 }))
    });

    // K(nu1, nu2) = sum over all roots <alpha,nu1><alpha,nu2>.
    let mut killing = vec![vec![Q::zero(); rank]; rank];
    for alpha in &positive_roots {
        for i in 0..rank {
            for j in 0..rank {
                killing[i][j] += q(2 * alpha.0[i] * alpha.0[j]);
            }
        }
    }
    let killing_dual = linalg::inverse(&killing)?;
    let cartan_inverse = linalg::inverse(&linalg::to_qmatrix(&cartan))?;

    Ok(RootSystem {
        kind,
        rank,
        cartan,
        positive_roots,
        positive_roots_simple: positive,
        positive_coroots,
        delta: WeightVector(vec![1; rank]),
        n_pos,
        dim_g: 2 * n_pos + rank,
        weyl,
        killing,
        killing_dual,
        minus_one_in_w,
        realization: linalg::to_qmatrix(&real),
        longest,
        cartan_inverse,
    })
}

/// Breadth-first closure of the simple reflections. Returns elements with
/// their word length.
fn enumerate_weyl(cartan: &[Vec<i64>], r: usize) -> Result<Vec<(WeylElement, usize)>> {
    // s_i on weight coordinates: mu -> mu - mu_i alpha_i.
    let gens: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut m = vec![0i64; r * r];
            for k in 0..r {
                m[k * r + k] = 1;
            }
            for k in 0..r {
                m[k * r + i] -= cartan[i][k];
            }
            m
        })
        .collect();
    let mut id = vec![0i64; r * r];
    for k in 0..r {
        id[k * r + k] = 1;
    }
    // Each entry carries its inverse: (g m)^-1 = m^-1 g.
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut order: Vec<(Vec<i64>, Vec<i64>, usize)> = vec![];
    seen.insert(id.clone());
    order.push((id.clone(), id, 0));
    let mut head = 0;
    while head < order.len() {
        let (m, minv, len) = order[head].clone();
        head += 1;
        for g in &gens {
            let next = matmul_i(g, &m, r);
            if !seen.contains(&next) {
                if seen.len() >= WEYL_CAP {
                    return Err(Error::Guard(format!("Weyl group larger than {WEYL_CAP}")));
                }
                seen.insert(next.clone());
                order.push((next, matmul_i(&minv, g, r), len + 1));
            }
        }
    }
    Ok(order
        .into_iter()
        .map(|(m, inv, len)| {
            (
                WeylElement {
                    rank: r,
                    matrix: m,
                    dual: transpose_i(&inv, r),
                    sign: if len % 2 == 0 { 1 } else { -1 },
                },
                len,
            )
        })
        .collect())
}

impl RootSystem {
    pub fn name(&self) -> String {
        match self.kind {
            Kind::G2 => "G2".into(),
            k => format!("{k:?}{}", self.rank),
        }
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn act(&self, w: &WeylElement, mu: &WeightVector) -> WeightVector {
        w.act(mu)
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.weyl[self.longest]
    }

    pub fn simple_root(&self, i: usize) -> WeightVector {
        WeightVector(self.cartan[i].clone())
    }

    /// All roots (positive then negative).
    pub fn all_roots(&self) -> Vec<WeightVector> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(|a| a.neg()));
        v
    }

    /// Maximal-height positive root.
    pub fn highest_root(&self) -> WeightVector {
        let (idx, _) = self
            .positive_roots_simple
            .iter()
            .enumerate()
            .max_by_key(|(_, c)| c.iter().sum::<i64>())
            .expect("nonempty root system");
        self.positive_roots[idx].clone()
    }

    /// `<mu, alpha^vee>` for the positive coroot with index `i`.
    pub fn coroot_pairing(&self, i: usize, mu: &[i64]) -> i64 {
        self.positive_coroots[i]
            .iter()
            .zip(mu)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Simple-root coordinates of a weight in the root lattice span.
    pub fn to_simple_root_coords(&self, mu: &WeightVector) -> Vec<Q> {
        let v: Vec<Q> = mu.0.iter().map(|&x| q(x)).collect();
        linalg::vecmat(&v, &self.cartan_inverse)
    }

    /// Fundamental-weight coordinates of a vector in the Euclidean realization.
    pub fn from_realization(&self, v: &[Q]) -> Vec<Q> {
        self.realization
            .iter()
            .map(|alpha| {
                let num: Q = alpha.iter().zip(v).map(|(a, b)| a * b).sum();
                let len2: Q = alpha.iter().map(|a| a * a).sum();
                q(2) * num / len2
            })
            .collect()
    }

    /// `-w_0 lambda`, the highest weight of the dual representation.
    pub fn dual_weight(&self, lambda: &WeightVector) -> WeightVector {
        self.longest_element().act(lambda).neg()
    }

    /// Killing form on coroot coordinates.
    pub fn killing_form(&self, a: &CoweightVector, b: &CoweightVector) -> Q {
        bilinear(&self.killing, &a.0, &b.0)
    }

    /// Inverse Killing form on weight coordinates.
    pub fn killing_dual_form(&self, a: &WeightVector, b: &WeightVector) -> Q {
        let av: Vec<Q> = a.0.iter().map(|&x| q(x)).collect();
        let bv: Vec<Q> = b.0.iter().map(|&x| q(x)).collect();
        bilinear(&self.killing_dual, &av, &bv)
    }

    /// Reflect a weight into the dominant chamber.
    pub fn dominant_representative(&self, mu: &WeightVector) -> WeightVector {
        let mut v = mu.clone();
        loop {
            match v.0.iter().position(|&c| c < 0) {
                None => return v,
                Some(i) => {
                    let c = v.0[i];
                    for (k, x) in v.0.iter_mut().enumerate() {
                        *x -= c * self.cartan[i][k];
                    }
                }
            }
        }
    }

    /// W-orbit of a weight, by closure under simple reflections.
    pub fn orbit(&self, mu: &WeightVector) -> Vec<WeightVector> {
        let mut seen: HashSet<WeightVector> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        let mut out = vec![];
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let c = v.0[i];
                if c == 0 {
                    continue;
                }
                let mut w = v.clone();
                for (k, x) in w.0.iter_mut().enumerate() {
                    *x -= c * self.cartan[i][k];
                }
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
            out.push(v);
        }
        out.sort();
        out
    }

    /// Sum of the positive coroots paired with `lambda`, i.e. `<lambda, 2 delta^vee>`.
    pub fn two_delta_vee_pairing(&self, lambda: &WeightVector) -> i64 {
        (0..self.n_pos)
            .map(|i| self.coroot_pairing(i, &lambda.0))
            .sum()
    }
}

pub fn bilinear(m: &QMatrix, a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() && !m[i][j].is_zero() {
                s += x * y * &m[i][j];
            }
        }
    }
    s
}

/// Check that a matrix (on weight coordinates) permutes the given root set.
pub fn permutes_roots(w: &WeylElement, roots: &[WeightVector]) -> bool {
    let set: HashSet<&WeightVector> = roots.iter().collect();
    roots.iter().all(|a| set.contains(&w.act(a)))
}

/// Determinant of a small integer matrix, via exact rationals.
pub fn det_i(m: &[Vec<i64>]) -> i64 {
    let dm: Vec<Vec<num_bigint::BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| num_bigint::BigInt::from(x)).collect())
        .collect();
    let d = linalg::det_bareiss(&dm);
    num_traits::ToPrimitive::to_i64(&d).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{matmul, transpose};

    fn rs(k: Kind, r: usize) -> RootSystem {
        build_root_system(k, r).unwrap()
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn small_cases() {
        let a1 = rs(Kind::A, 1);
        assert_eq!((a1.n_pos, a1.weyl_order(), a1.dim_g), (1, 2, 3));
        assert_eq!(a1.positive_roots, vec![WeightVector(vec![2])]);

        let a2 = rs(Kind::A, 2);
        assert_eq!((a2.n_pos, a2.weyl_order(), a2.dim_g), (3, 6, 8));
        assert_eq!(a2.delta, WeightVector(vec![1, 1]));

        let g2 = rs(Kind::G2, 2);
        assert_eq!((g2.n_pos, g2.weyl_order(), g2.dim_g), (6, 12, 14));
    }

    #[test]
    fn weyl_orders() {
        for (k, r) in supported() {
            let sys = rs(k, r);
            let expect = match k {
                Kind::A => factorial(r + 1),
                Kind::B | Kind::C => (1 << r) * factorial(r),
                Kind::D => (1 << (r - 1)) * factorial(r),
                Kind::G2 => 12,
            };
            assert_eq!(sys.weyl_order(), expect, "{}", sys.name());
            let signs: i64 = sys.weyl.iter().map(|w| i64::from(w.sign)).sum();
            assert_eq!(signs, 0);
        }
    }

    #[test]
    fn weyl_elements_permute_roots_and_sign_is_det() {
        for (k, r) in supported().into_iter().filter(|(_, r)| *r <= 4) {
            let sys = rs(k, r);
            let roots = sys.all_roots();
            for w in &sys.weyl {
                assert!(permutes_roots(w, &roots));
                assert_eq!(det_i(&w.matrix()), i64::from(w.sign));
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let a1 = rs(Kind::A, 1);
        let s = a1.weyl.iter().find(|w| !w.is_identity()).unwrap();
        assert_eq!(s.act(&WeightVector(vec![5])), WeightVector(vec![-5]));

        let a2 = rs(Kind::A, 2);
        // s_1 is a length-one element; find it by its action on varpi_2.
        let s1 = a2
            .weyl
            .iter()
            .find(|w| w.sign == -1 && w.act(&WeightVector(vec![0, 1])) == WeightVector(vec![0, 1]))
            .unwrap();
        assert_eq!(s1.act(&WeightVector(vec![1, 0])), WeightVector(vec![-1, 1]));
        let id = a2.weyl.iter().find(|w| w.is_identity()).unwrap();
        assert_eq!(id.act(&WeightVector(vec![3, 4])), WeightVector(vec![3, 4]));
    }

    #[test]
    fn pairing_is_preserved() {
        let sys = rs(Kind::B, 3);
        let mu = WeightVector(vec![1, -2, 3]);
        let nu = CoweightVector::from_ints(&[2, 1, -1]);
        for w in &sys.weyl {
            assert_eq!(w.act(&mu).pair(&w.act_coweight(&nu)), mu.pair(&nu));
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Kind::A, 1).highest_root(), WeightVector(vec![2]));
        assert_eq!(rs(Kind::A, 2).highest_root(), WeightVector(vec![1, 1]));
        assert_eq!(rs(Kind::B, 2).highest_root(), WeightVector(vec![0, 2]));
        assert_eq!(rs(Kind::C, 2).highest_root(), WeightVector(vec![2, 0]));
        assert_eq!(rs(Kind::G2, 2).highest_root(), WeightVector(vec![0, 1]));
        assert_eq!(
            rs(Kind::D, 4).highest_root(),
            WeightVector(vec![0, 1, 0, 0])
        );
    }

    #[test]
    fn killing_form_is_invariant_and_dual_is_inverse() {
        for (k, r) in supported().into_iter().filter(|(_, r)| *r <= 3) {
            let sys = rs(k, r);
            let kq = &sys.killing;
            for w in &sys.weyl {
                let d = linalg::to_qmatrix(&w.dual_matrix());
                assert_eq!(&matmul(&transpose(&d), &matmul(kq, &d)), kq);
            }
            assert_eq!(matmul(&sys.killing_dual, kq), linalg::identity(r));
        }
    }

    #[test]
    fn strange_formula() {
        for (k, r) in supported() {
            let sys = rs(k, r);
            let v = sys.killing_dual_form(&sys.delta, &sys.delta);
            assert_eq!(q(24) * v, q(sys.dim_g as i64), "{}", sys.name());
        }
    }

    #[test]
    fn minus_one_membership() {
        for (k, r) in supported() {
            let sys = rs(k, r);
            let expect = match k {
                Kind::A => r == 1,
                Kind::B | Kind::C | Kind::G2 => true,
                Kind::D => r % 2 == 0,
            };
            assert_eq!(sys.minus_one_in_w, expect, "{}", sys.name());
        }
    }

    #[test]
    fn unsupported_is_config_error() {
        assert!(matches!(
            build_root_system(Kind::A, 7),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            build_root_system(Kind::D, 2),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn dual_weight_type_a() {
        let a2 = rs(Kind::A, 2);
        assert_eq!(
            a2.dual_weight(&WeightVector(vec![2, 1])),
            WeightVector(vec![1, 2])
        );
        let b2 = rs(Kind::B, 2);
        assert_eq!(
            b2.dual_weight(&WeightVector(vec![2, 1])),
            WeightVector(vec![2, 1])
        );
    }
}
