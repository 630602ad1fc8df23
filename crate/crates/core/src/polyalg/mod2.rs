use std::collections::BTreeSet;

use super::mono::Mono;

/// Polynomial over the two-element field in `v1..v_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Poly {
    n: usize,
    terms: BTreeSet<Mono>,
}

impl Mod2Poly {
    pub fn zero(n: usize) -> Self {
        Mod2Poly {
            n,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Mod2Poly::zero(n);
        p.terms.insert(Mono::one(n));
        p
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut p = Mod2Poly::zero(n);
        p.terms.insert(Mono::var(n, i));
        p
    }

    /// `sum_{i in support} v_i`.
    pub fn linear(n: usize, support: &[usize]) -> Self {
        let mut p = Mod2Poly::zero(n);
        for &i in support {
            p.toggle(Mono::var(n, i));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Mono> {
        self.terms.iter()
    }

    pub fn contains(&self, exps: &[u16]) -> bool {
        self.terms.contains(&Mono::new(exps.to_vec()))
    }

    /// Add a single monomial (removes it if already present).
    pub fn toggle(&mut self, m: Mono) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &Mod2Poly) -> Mod2Poly {
        assert_eq!(self.n, other.n, "arity mismatch");
        Mod2Poly {
            n: self.n,
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        }
    }

    pub fn mul(&self, other: &Mod2Poly) -> Mod2Poly {
        self.mul_trunc(other, u32::MAX)
    }

    /// Product with all terms of degree above `maxdeg` dropped.
    pub fn mul_trunc(&self, other: &Mod2Poly, maxdeg: u32) -> Mod2Poly {
        assert_eq!(self.n, other.n, "arity mismatch");
        let mut out = Mod2Poly::zero(self.n);
        for a in &self.terms {
            for b in &other.terms {
                if a.degree() + b.degree() <= maxdeg {
                    out.toggle(a.mul(b));
                }
            }
        }
        out
    }

    /// `self^e` truncated at degree `maxdeg`, by repeated squaring.
    pub fn pow_trunc(&self, e: u64, maxdeg: u32) -> Mod2Poly {
        let mut result = Mod2Poly::one(self.n);
        let mut base = self.truncate(maxdeg);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_trunc(&base, maxdeg);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, maxdeg);
            }
        }
        result
    }

    pub fn truncate(&self, maxdeg: u32) -> Mod2Poly {
        Mod2Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() <= maxdeg)
                .cloned()
                .collect(),
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Mod2Poly {
        Mod2Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.n).map(|i| format!("v{i}")).collect();
        self.to_text_with(&names)
    }

    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|m| super::render::monomial_text(m.exps(), names).unwrap_or_else(|| "1".into()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_is_idempotent() {
        let v = Mod2Poly::var(2, 0);
        assert!(v.add(&v).is_zero());
    }

    #[test]
    fn d_expansion() {
        // (1+v1)(1+v2)(1+v1+v2)
        let one = Mod2Poly::one(2);
        let v1 = Mod2Poly::var(2, 0);
        let v2 = Mod2Poly::var(2, 1);
        let d = one.add(&v1).mul(&one.add(&v2)).mul(&one.add(&v1).add(&v2));
        let expected: Vec<Vec<u16>> = vec![
            vec![0, 0],
            vec![2, 0],
            vec![0, 2],
            vec![1, 1],
            vec![2, 1],
            vec![1, 2],
        ];
        assert_eq!(d.terms().count(), expected.len());
        for e in expected {
            assert!(d.contains(&e), "{e:?}");
        }
    }

    #[test]
    fn truncated_power() {
        // (1+v^2)^2 = 1 + v^4
        let p = Mod2Poly::one(1).add(&Mod2Poly::var(1, 0).mul(&Mod2Poly::var(1, 0)));
        assert_eq!(p.pow_trunc(2, 6).to_text(), "1 + v1^4");
        assert_eq!(p.pow_trunc(2, 3).to_text(), "1");
    }
}
