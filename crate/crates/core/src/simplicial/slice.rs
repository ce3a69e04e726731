//! Left and right slices of a stratified complex over one of its simplices.
//!
//! A `k`-simplex of the right slice `A/σ` (σ an `n`-simplex) is a
//! `(k+n+1)`-simplex of `A` whose last `n+1` vertices span σ; the left slice
//! uses the first `n+1` vertices instead. A slice simplex of positive
//! dimension is thin iff the representing simplex of `A` is thin.

use std::collections::HashMap;

use super::complex::{ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex, Surjection};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `σ \ A`: simplices starting at σ.
    Left,
    /// `A / σ`: simplices ending at σ.
    Right,
}

#[derive(Clone, Debug)]
pub struct Slice {
    complex: StratifiedComplex,
    representatives: Vec<Vec<SimplexRef>>,
}

impl Slice {
    pub fn new(a: &StratifiedComplex, sigma: &SimplexRef, side: Side) -> Result<Self> {
        if !a.contains(sigma.target()) {
            return Err(Error::UnknownSimplex(sigma.target().to_string()));
        }
        let n = sigma.dim();
        if n > a.bound() {
            return Err(Error::InvalidParameters(format!(
                "a {n}-simplex exceeds the bound {}",
                a.bound()
            )));
        }
        // a nondegenerate slice k-simplex needs k + 1 distinct vertices in A
        let bound = a.bound();
        let mut builder = ComplexBuilder::new(bound);
        let mut representatives: Vec<Vec<SimplexRef>> = vec![Vec::new(); bound + 1];
        let mut index: HashMap<SimplexRef, SimplexId> = HashMap::new();
        for k in 0..=bound {
            let total = k + n + 1;
            for tau in a.simplices(total) {
                let surj = tau.surjection();
                let (span, free) = match side {
                    Side::Right => (k + 1..=total, 0..=k),
                    Side::Left => (0..=n, n + 1..=total),
                };
                let restricted: Surjection = span.map(|j| surj[j]).collect();
                if a.act_raw(tau.target(), restricted) != *sigma {
                    continue;
                }
                let free: Vec<usize> = free.collect();
                if free.windows(2).any(|w| surj[w[0]] == surj[w[1]]) {
                    continue;
                }
                let faces: Vec<SimplexRef> = if k == 0 {
                    Vec::new()
                } else {
                    (0..=k)
                        .map(|i| {
                            let i_a = match side {
                                Side::Right => i,
                                Side::Left => n + 1 + i,
                            };
                            let f = a.face_unchecked(&tau, i_a);
                            normalize(a, &index, &f, k - 1, side)
                        })
                        .collect()
                };
                let marked = k > 0 && a.is_thin(&tau);
                let id = builder.add_with_dim(a.describe(&tau), k, faces, marked)?;
                index.insert(tau.clone(), id);
                representatives[k].push(tau);
            }
        }
        Ok(Slice {
            complex: builder.build_unchecked(),
            representatives,
        })
    }

    pub fn complex(&self) -> &StratifiedComplex {
        &self.complex
    }

    pub fn into_complex(self) -> StratifiedComplex {
        self.complex
    }

    /// The simplex of `A` representing a slice simplex.
    pub fn representative(&self, id: SimplexId) -> &SimplexRef {
        &self.representatives[id.dim][id.index]
    }
}

/// Writes a slice `k`-simplex (given by its representative) in normal form.
fn normalize(
    a: &StratifiedComplex,
    index: &HashMap<SimplexRef, SimplexId>,
    tau: &SimplexRef,
    k: usize,
    side: Side,
) -> SimplexRef {
    let surj = tau.surjection();
    let total = surj.len() - 1;
    let free: Vec<usize> = match side {
        Side::Right => (0..=k).collect(),
        Side::Left => (total - k..=total).collect(),
    };
    let mut theta = Surjection::with_capacity(k + 1);
    let mut keep = Vec::new();
    let mut level = 0u8;
    for (pos, &j) in free.iter().enumerate() {
        if pos > 0 {
            if surj[j] != surj[free[pos - 1]] {
                level += 1;
                keep.push(j);
            }
        } else {
            keep.push(j);
        }
        theta.push(level);
    }
    let positions: Vec<usize> = match side {
        Side::Right => keep.iter().copied().chain(k + 1..=total).collect(),
        Side::Left => (0..total - k).chain(keep.iter().copied()).collect(),
    };
    let comp: Surjection = positions.iter().map(|&j| surj[j]).collect();
    let rep = a.act_raw(tau.target(), comp);
    let id = index[&rep];
    SimplexRef::from_parts(id, theta)
}

pub fn slice(a: &StratifiedComplex, sigma: &SimplexRef, side: Side) -> Result<StratifiedComplex> {
    Slice::new(a, sigma, side).map(Slice::into_complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn interval_over_its_endpoint() {
        let d1 = shapes::standard(1);
        let s = slice(&d1, &d1.simplex("1").unwrap(), Side::Right).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.counts(), vec![2, 1]);
        let labels: Vec<_> = s.all_ids().map(|id| s.label(id).to_string()).collect();
        assert_eq!(labels, ["01", "s0(1)", "s1(01)"]);
        // the edge s1(01) is degenerate in A, hence thin
        assert!(s.is_marked(s.id("s1(01)").unwrap()));
        let e = s.id("s1(01)").unwrap();
        assert_eq!(s.describe(&s.faces(e)[0]), "s0(1)");
        assert_eq!(s.describe(&s.faces(e)[1]), "01");
    }

    #[test]
    fn interval_under_its_source() {
        let d1 = shapes::standard(1);
        let s = slice(&d1, &d1.simplex("0").unwrap(), Side::Left).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.counts(), vec![2, 1]);
    }

    #[test]
    fn point_over_point() {
        let p = shapes::standard(0);
        let s = slice(&p.clone().with_bound(3).unwrap(), &p.simplex("0").unwrap(), Side::Right)
            .unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.counts(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn sharp_complex_slices_are_sharp() {
        let a = shapes::standard(3).sharp();
        for side in [Side::Left, Side::Right] {
            let s = slice(&a, &a.simplex("1").unwrap(), side).unwrap();
            assert!(s.validate().is_empty());
            assert!(s.all_ids().filter(|id| id.dim > 0).all(|id| s.is_marked(id)));
        }
    }

    #[test]
    fn slice_of_simplex_over_top_vertex_is_cone_shaped() {
        // Δ[2]/2 has vertices 02, 12 and s0(2), and is again a 2-simplex
        let d2 = shapes::standard(2);
        let s = slice(&d2, &d2.simplex("2").unwrap(), Side::Right).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!(s.counts(), vec![3, 3, 1]);
    }
}
