use std::cmp::Ordering;

/// Exponent vector. Ordered by total degree, then so that within a degree a
/// larger exponent on an earlier variable sorts first (`x1^2 < x1*x2 < x2^2`).
/// This is a monomial order, so the maximum is a valid leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u32,
    exps: Box<[u16]>,
}

impl Mono {
    pub fn new(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| u32::from(e)).sum();
        Mono {
            deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(n: usize) -> Self {
        Mono::new(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono::new(e)
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Degree restricted to variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Mono {
            deg: self.deg + other.deg,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Mono {
            deg: other.deg - self.deg,
            exps: exps.into_boxed_slice(),
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in `Mono` order.
pub fn compositions(n: usize, d: usize) -> Vec<Vec<u16>> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if n == 1 {
            prefix.push(d as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    if n == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(n, d, &mut vec![], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_within_degree() {
        let a = Mono::new(vec![2, 0]);
        let b = Mono::new(vec![1, 1]);
        let c = Mono::new(vec![0, 2]);
        let one = Mono::new(vec![0, 0]);
        assert!(one < a && a < b && b < c);
    }

    #[test]
    fn compositions_count_and_order() {
        let c = compositions(3, 2);
        assert_eq!(c.len(), 6);
        let monos: Vec<Mono> = c.into_iter().map(Mono::new).collect();
        assert!(monos.windows(2).all(|w| w[0] < w[1]));
    }
}
