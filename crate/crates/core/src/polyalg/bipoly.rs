use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mod2::Mod2Poly;
use super::mono::Mono;
use crate::error::{Error, Result};
use crate::linalg::{self, q, QMatrix, Q};
use crate::rootsys::WeightVector;

/// Exact-rational polynomial in two variable families: `a1..a_na` (weight
/// coordinates) followed by `y1..y_ny` (coroot coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    na: usize,
    ny: usize,
    terms: BTreeMap<Mono, Q>,
}

impl BiPoly {
    pub fn zero(na: usize, ny: usize) -> Self {
        BiPoly {
            na,
            ny,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(na: usize, ny: usize, c: Q) -> Self {
        let mut p = BiPoly::zero(na, ny);
        if !c.is_zero() {
            p.terms.insert(Mono::one(na + ny), c);
        }
        p
    }

    pub fn one(na: usize, ny: usize) -> Self {
        BiPoly::constant(na, ny, Q::one())
    }

    pub fn a_var(na: usize, ny: usize, i: usize) -> Self {
        let mut p = BiPoly::zero(na, ny);
        p.terms.insert(Mono::var(na + ny, i), Q::one());
        p
    }

    pub fn y_var(na: usize, ny: usize, i: usize) -> Self {
        let mut p = BiPoly::zero(na, ny);
        p.terms.insert(Mono::var(na + ny, na + i), Q::one());
        p
    }

    /// Linear form `sum c_i a_i`.
    pub fn linear_a(na: usize, ny: usize, coeffs: &[Q]) -> Self {
        let mut p = BiPoly::zero(na, ny);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Mono::var(na + ny, i), c.clone());
            }
        }
        p
    }

    /// Linear form `sum c_i y_i`.
    pub fn linear_y(na: usize, ny: usize, coeffs: &[Q]) -> Self {
        let mut p = BiPoly::zero(na, ny);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Mono::var(na + ny, na + i), c.clone());
            }
        }
        p
    }

    /// Build from (exponents, coefficient) pairs; zero coefficients dropped,
    /// repeated exponents summed.
    pub fn from_terms<I>(na: usize, ny: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, Q)>,
    {
        let mut p = BiPoly::zero(na, ny);
        for (e, c) in terms {
            if e.len() != na + ny {
                return Err(Error::Arity(format!(
                    "exponent vector of length {} for arity ({na},{ny})",
                    e.len()
                )));
            }
            p.add_term(Mono::new(e), c);
        }
        Ok(p)
    }

    pub(crate) fn from_map(na: usize, ny: usize, terms: BTreeMap<Mono, Q>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        BiPoly { na, ny, terms }
    }

    pub fn na(&self) -> usize {
        self.na
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.na, self.ny)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> Q {
        self.terms
            .get(&Mono::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.terms
            .get(&Mono::one(self.na + self.ny))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &BiPoly) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::Arity(format!(
                "({},{}) vs ({},{})",
                self.na, self.ny, other.na, other.ny
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &BiPoly) -> Result<BiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &BiPoly) -> Result<BiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &BiPoly) -> Result<BiPoly> {
        self.check_arity(other)?;
        let mut out = BiPoly::zero(self.na, self.ny);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn add_assign_ref(&mut self, other: &BiPoly) {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &BiPoly, c: &Q) {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Q) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.na, self.ny);
        }
        BiPoly {
            na: self.na,
            ny: self.ny,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut result = BiPoly::one(self.na, self.ny);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Maximal degree in the a-variables (0 for the zero polynomial).
    pub fn a_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.partial_degree(0..self.na))
            .max()
            .unwrap_or(0)
    }

    /// Maximal degree in the y-variables (0 for the zero polynomial).
    pub fn y_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.partial_degree(self.na..self.na + self.ny))
            .max()
            .unwrap_or(0)
    }

    /// `(a-degree, y-degree)`; `None` for zero.
    pub fn ul_deg(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            None
        } else {
            Some((self.a_degree(), self.y_degree()))
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Substitute `a_i := values[i]`. The result keeps the arity and has
    /// a-degree zero.
    pub fn eval_a(&self, values: &[Q]) -> BiPoly {
        assert_eq!(values.len(), self.na);
        let mut out = BiPoly::zero(self.na, self.ny);
        let mut cache: Vec<Vec<Q>> = values.iter().map(|v| vec![Q::one(), v.clone()]).collect();
        for (m, c) in &self.terms {
            let e = m.exps();
            let mut coef = c.clone();
            for i in 0..self.na {
                let k = e[i] as usize;
                if k > 0 {
                    while cache[i].len() <= k {
                        let next = cache[i].last().unwrap() * &values[i];
                        cache[i].push(next);
                    }
                    coef *= &cache[i][k];
                }
            }
            let mut ex = e.to_vec();
            for x in ex.iter_mut().take(self.na) {
                *x = 0;
            }
            out.add_term(Mono::new(ex), coef);
        }
        out
    }

    pub fn eval_mu(&self, mu: &WeightVector) -> BiPoly {
        let v: Vec<Q> = mu.0.iter().map(|&x| q(x)).collect();
        self.eval_a(&v)
    }

    /// Substitute `y_i := values[i]`.
    pub fn eval_y(&self, values: &[Q]) -> BiPoly {
        assert_eq!(values.len(), self.ny);
        let mut out = BiPoly::zero(self.na, self.ny);
        for (m, c) in &self.terms {
            let e = m.exps();
            let mut coef = c.clone();
            for i in 0..self.ny {
                let k = e[self.na + i];
                if k > 0 {
                    coef *= num_traits::pow(values[i].clone(), k as usize);
                }
            }
            let mut ex = e.to_vec();
            for x in ex.iter_mut().skip(self.na) {
                *x = 0;
            }
            out.add_term(Mono::new(ex), coef);
        }
        out
    }

    /// Value at a point of both families.
    pub fn eval_point(&self, a: &[Q], y: &[Q]) -> Q {
        self.eval_a(a).eval_y(y).constant_term()
    }

    /// `(tau f)(mu, nu) = f(mu + delta, nu)` with `delta = (1, ..., 1)`.
    pub fn translate_delta(&self) -> BiPoly {
        self.translate_a(&vec![Q::one(); self.na])
    }

    /// Substitute `a_i := a_i + shift[i]`.
    pub fn translate_a(&self, shift: &[Q]) -> BiPoly {
        let (na, ny) = self.arity();
        let images: Vec<BiPoly> = (0..na)
            .map(|i| {
                let mut p = BiPoly::a_var(na, ny, i);
                p.add_term(Mono::one(na + ny), shift[i].clone());
                p
            })
            .collect();
        let yimages: Vec<BiPoly> = (0..ny).map(|i| BiPoly::y_var(na, ny, i)).collect();
        self.substitute(&images, &yimages)
            .expect("translation images share the arity")
    }

    /// Replace every variable by a polynomial. All images must share one arity,
    /// which becomes the arity of the result.
    pub fn substitute(&self, a_images: &[BiPoly], y_images: &[BiPoly]) -> Result<BiPoly> {
        if a_images.len() != self.na || y_images.len() != self.ny {
            return Err(Error::Arity("substitution image count".into()));
        }
        let images: Vec<&BiPoly> = a_images.iter().chain(y_images).collect();
        let target = match images.first() {
            Some(p) => p.arity(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.arity() != target) {
            return Err(Error::Arity("substitution images of mixed arity".into()));
        }
        let (tna, tny) = target;
        let mut powers: Vec<Vec<BiPoly>> = images
            .iter()
            .map(|p| vec![BiPoly::one(tna, tny), (*p).clone()])
            .collect();
        let mut out = BiPoly::zero(tna, tny);
        for (m, c) in &self.terms {
            let mut term = BiPoly::constant(tna, tny, c.clone());
            for (v, &k) in m.exps().iter().enumerate() {
                let k = k as usize;
                if k == 0 {
                    continue;
                }
                while powers[v].len() <= k {
                    let next = powers[v].last().unwrap() * images[v];
                    powers[v].push(next);
                }
                term = &term * &powers[v][k];
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// Substitute `a_i := sum_j m[i][j] a_j`. `m` must be invertible.
    pub fn substitute_linear_a(&self, m: &QMatrix) -> Result<BiPoly> {
        let (na, ny) = self.arity();
        check_square_invertible(m, na)?;
        let a_images: Vec<BiPoly> = m.iter().map(|row| BiPoly::linear_a(na, ny, row)).collect();
        let y_images: Vec<BiPoly> = (0..ny).map(|i| BiPoly::y_var(na, ny, i)).collect();
        self.substitute(&a_images, &y_images)
    }

    /// Substitute `y_i := sum_j m[i][j] y_j`. `m` must be invertible.
    pub fn substitute_linear_y(&self, m: &QMatrix) -> Result<BiPoly> {
        let (na, ny) = self.arity();
        check_square_invertible(m, ny)?;
        let a_images: Vec<BiPoly> = (0..na).map(|i| BiPoly::a_var(na, ny, i)).collect();
        let y_images: Vec<BiPoly> = m.iter().map(|row| BiPoly::linear_y(na, ny, row)).collect();
        self.substitute(&a_images, &y_images)
    }

    /// Exact division. Errors with the remainder if `g` does not divide `self`.
    pub fn exact_divide(&self, g: &BiPoly) -> Result<BiPoly> {
        self.check_arity(g)?;
        let (lm, lc) = match g.terms.iter().next_back() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::Invariant("division by the zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(self.na, self.ny);
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision {
                    remainder: rem.to_text(),
                });
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            for (gm, gc) in &g.terms {
                rem.add_term(qm.mul(gm), -(&qc * gc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Drop the (unused) a-block. Fails if any a-exponent is nonzero.
    pub fn y_only(&self) -> Result<BiPoly> {
        if self.a_degree() != 0 {
            return Err(Error::Arity(
                "polynomial still depends on a-variables".into(),
            ));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Mono::new(m.exps()[self.na..].to_vec()), c.clone()))
            .collect();
        Ok(BiPoly::from_map(0, self.ny, terms))
    }

    /// Re-embed with a different a-arity (y-block unchanged). Requires
    /// a-degree zero.
    pub fn with_a_arity(&self, na: usize) -> Result<BiPoly> {
        let y = self.y_only()?;
        let terms = y
            .terms
            .into_iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; na];
                e.extend_from_slice(m.exps());
                (Mono::new(e), c)
            })
            .collect();
        Ok(BiPoly::from_map(na, self.ny, terms))
    }

    /// Place the y-block of `self` at positions `offset..offset+ny` of a
    /// y-block of size `total` (pure y-polynomials only).
    pub fn embed_y(&self, offset: usize, total: usize) -> Result<BiPoly> {
        let y = self.y_only()?;
        if offset + y.ny > total {
            return Err(Error::Arity("embedding does not fit".into()));
        }
        let terms = y
            .terms
            .into_iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; total];
                e[offset..offset + y.ny].copy_from_slice(m.exps());
                (Mono::new(e), c)
            })
            .collect();
        Ok(BiPoly::from_map(0, total, terms))
    }

    /// Reduce a pure y-polynomial with integer coefficients mod 2, mapping
    /// `y_i` (a lattice generator) to `v_i`.
    pub fn mod2_reduce(&self) -> Result<Mod2Poly> {
        let y = self.y_only()?;
        let two = BigInt::from(2);
        let mut out = Mod2Poly::zero(y.ny);
        for (m, c) in &y.terms {
            if !c.is_integer() {
                return Err(Error::NonInteger(format!(
                    "coefficient {c} in mod 2 reduction"
                )));
            }
            if (c.numer() % &two).abs().is_one() {
                out.toggle(m.clone());
            }
        }
        Ok(out)
    }

    /// Homogeneous component of y-degree `d`.
    pub fn y_component(&self, d: u32) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.partial_degree(self.na..self.na + self.ny) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        BiPoly::from_map(self.na, self.ny, terms)
    }

    /// Swap the a- and y-families.
    pub fn swap_families(&self) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exps();
                let mut ex = e[self.na..].to_vec();
                ex.extend_from_slice(&e[..self.na]);
                (Mono::new(ex), c.clone())
            })
            .collect();
        BiPoly::from_map(self.ny, self.na, terms)
    }
}

fn check_square_invertible(m: &QMatrix, n: usize) -> Result<()> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::Arity(format!("substitution matrix must be {n}x{n}")));
    }
    linalg::inverse(m).map(|_| ())
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.try_add(rhs).expect("arity mismatch in +")
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.try_sub(rhs).expect("arity mismatch in -")
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.try_mul(rhs).expect("arity mismatch in *")
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Q::one())
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}
