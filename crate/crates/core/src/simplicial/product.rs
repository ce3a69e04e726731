//! Cartesian product of stratified complexes.
//!
//! A simplex of `A × B` is thin iff both of its projections are thin.

use std::collections::HashMap;
use std::sync::Arc;

use super::complex::{ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex, Surjection};
use super::map::ComplexMap;
use super::operator::surjections;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Product {
    complex: StratifiedComplex,
    pairs: Vec<Vec<(SimplexRef, SimplexRef)>>,
    index: HashMap<(SimplexRef, SimplexRef), SimplexId>,
}

impl Product {
    pub fn new(a: &StratifiedComplex, b: &StratifiedComplex) -> Self {
        let bound = a.bound() + b.bound();
        let mut builder = ComplexBuilder::new(bound);
        let mut pairs: Vec<Vec<(SimplexRef, SimplexRef)>> = vec![Vec::new(); bound + 1];
        let mut index = HashMap::new();
        for m in 0..=bound {
            for p in 0..=a.bound().min(m) {
                for q in 0..=b.bound().min(m) {
                    if p + q < m || a.count(p) == 0 || b.count(q) == 0 {
                        continue;
                    }
                    let sa = surjections(m, p);
                    let sb = surjections(m, q);
                    for alpha in &sa {
                        for beta in &sb {
                            let jointly_injective = (0..m).all(|j| {
                                alpha[j] != alpha[j + 1] || beta[j] != beta[j + 1]
                            });
                            if !jointly_injective {
                                continue;
                            }
                            for x in a.ids(p) {
                                for y in b.ids(q) {
                                    let ra = SimplexRef::from_parts(x, alpha.iter().copied().collect());
                                    let rb = SimplexRef::from_parts(y, beta.iter().copied().collect());
                                    let faces = if m == 0 {
                                        Vec::new()
                                    } else {
                                        (0..=m)
                                            .map(|i| {
                                                let fa = a.face_unchecked(&ra, i);
                                                let fb = b.face_unchecked(&rb, i);
                                                normalize(&index, fa, fb)
                                            })
                                            .collect()
                                    };
                                    let marked = m > 0 && a.is_thin(&ra) && b.is_thin(&rb);
                                    let label =
                                        format!("({},{})", a.describe(&ra), b.describe(&rb));
                                    let id = builder
                                        .add_with_dim(label, m, faces, marked)
                                        .expect("product labels are distinct");
                                    index.insert((ra.clone(), rb.clone()), id);
                                    pairs[m].push((ra, rb));
                                }
                            }
                        }
                    }
                }
            }
        }
        let complex = builder.build_unchecked();
        Product {
            complex,
            pairs,
            index,
        }
    }

    pub fn complex(&self) -> &StratifiedComplex {
        &self.complex
    }

    pub fn into_complex(self) -> StratifiedComplex {
        self.complex
    }

    /// The pair of simplices represented by a nondegenerate simplex.
    pub fn components(&self, id: SimplexId) -> &(SimplexRef, SimplexRef) {
        &self.pairs[id.dim][id.index]
    }

    /// The simplex of the product with the given components (same dimension).
    pub fn locate(&self, a: &SimplexRef, b: &SimplexRef) -> Option<SimplexRef> {
        if a.dim() != b.dim() {
            return None;
        }
        let (theta, ra, rb) = split_common_collapse(a, b);
        self.index
            .get(&(ra, rb))
            .map(|&id| SimplexRef::from_parts(id, theta))
    }

    pub fn projection_left(&self, a: Arc<StratifiedComplex>) -> Result<ComplexMap> {
        self.projection(a, |p| p.0.clone())
    }

    pub fn projection_right(&self, b: Arc<StratifiedComplex>) -> Result<ComplexMap> {
        self.projection(b, |p| p.1.clone())
    }

    fn projection(
        &self,
        target: Arc<StratifiedComplex>,
        pick: impl Fn(&(SimplexRef, SimplexRef)) -> SimplexRef,
    ) -> Result<ComplexMap> {
        let assignment = self
            .pairs
            .iter()
            .map(|row| row.iter().map(&pick).collect())
            .collect();
        ComplexMap::new(Arc::new(self.complex.clone()), target, assignment)
    }
}

fn normalize(
    index: &HashMap<(SimplexRef, SimplexRef), SimplexId>,
    a: SimplexRef,
    b: SimplexRef,
) -> SimplexRef {
    let (theta, ra, rb) = split_common_collapse(&a, &b);
    let id = index[&(ra, rb)];
    SimplexRef::from_parts(id, theta)
}

/// Writes `(a, b) = θ^*(a', b')` with `(a', b')` having no common collapse.
fn split_common_collapse(a: &SimplexRef, b: &SimplexRef) -> (Surjection, SimplexRef, SimplexRef) {
    let (sa, sb) = (a.surjection(), b.surjection());
    let m = sa.len() - 1;
    let mut theta = Surjection::with_capacity(m + 1);
    let mut keep = Vec::with_capacity(m + 1);
    let mut level = 0u8;
    theta.push(0);
    keep.push(0usize);
    for j in 0..m {
        if sa[j] == sa[j + 1] && sb[j] == sb[j + 1] {
            theta.push(level);
        } else {
            level += 1;
            theta.push(level);
            keep.push(j + 1);
        }
    }
    let ra = SimplexRef::from_parts(a.target(), keep.iter().map(|&j| sa[j]).collect());
    let rb = SimplexRef::from_parts(b.target(), keep.iter().map(|&j| sb[j]).collect());
    (theta, ra, rb)
}

pub fn product(a: &StratifiedComplex, b: &StratifiedComplex) -> StratifiedComplex {
    Product::new(a, b).into_complex()
}
