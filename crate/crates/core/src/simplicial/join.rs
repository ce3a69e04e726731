//! Stratified join.
//!
//! An `n`-simplex of `A ⋆ B` is a pair of a `k`-simplex of `A` and an
//! `(n-k-1)`-simplex of `B`, where either side may be empty. A nondegenerate
//! pair is thin iff at least one of its components is thin.

use std::collections::HashMap;

use super::complex::{ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex, Surjection};

/// One side of a join simplex; `None` is the empty (−1)-simplex.
pub type JoinSide = Option<SimplexRef>;

#[derive(Clone, Debug)]
pub struct Join {
    complex: StratifiedComplex,
    pairs: Vec<Vec<(Option<SimplexId>, Option<SimplexId>)>>,
    index: HashMap<(Option<SimplexId>, Option<SimplexId>), SimplexId>,
}

fn side_dim(s: &Option<SimplexId>) -> isize {
    s.map_or(-1, |id| id.dim as isize)
}

impl Join {
    pub fn new(a: &StratifiedComplex, b: &StratifiedComplex) -> Self {
        let bound = a.bound() + b.bound() + 1;
        let mut builder = ComplexBuilder::new(bound);
        let mut pairs = vec![Vec::new(); bound + 1];
        let mut index = HashMap::new();
        for n in 0..=bound as isize {
            for k in -1..=n {
                let l = n - k - 1;
                let left: Vec<Option<SimplexId>> = if k < 0 {
                    vec![None]
                } else {
                    a.ids(k as usize).map(Some).collect()
                };
                let right: Vec<Option<SimplexId>> = if l < 0 {
                    vec![None]
                } else {
                    b.ids(l as usize).map(Some).collect()
                };
                for x in &left {
                    for y in &right {
                        let faces = if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n as usize)
                                .map(|i| face_of(a, b, &index, *x, *y, i))
                                .collect()
                        };
                        let marked = x.is_some_and(|id| a.is_marked(id))
                            || y.is_some_and(|id| b.is_marked(id));
                        let label = format!(
                            "({}|{})",
                            x.map_or("", |id| a.label(id)),
                            y.map_or("", |id| b.label(id))
                        );
                        let id = builder
                            .add_with_dim(label, n as usize, faces, marked)
                            .expect("join labels are distinct");
                        index.insert((*x, *y), id);
                        pairs[n as usize].push((*x, *y));
                    }
                }
            }
        }
        Join {
            complex: builder.build_unchecked(),
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

    pub fn components(&self, id: SimplexId) -> (Option<SimplexId>, Option<SimplexId>) {
        self.pairs[id.dim][id.index]
    }

    pub fn locate(&self, x: Option<SimplexId>, y: Option<SimplexId>) -> Option<SimplexId> {
        self.index.get(&(x, y)).copied()
    }
}

/// Face `i` of the nondegenerate pair `(x, y)`, normalized.
fn face_of(
    a: &StratifiedComplex,
    b: &StratifiedComplex,
    index: &HashMap<(Option<SimplexId>, Option<SimplexId>), SimplexId>,
    x: Option<SimplexId>,
    y: Option<SimplexId>,
    i: usize,
) -> SimplexRef {
    let k = side_dim(&x);
    let (fx, fy): (JoinSide, JoinSide) = if (i as isize) <= k {
        let x = x.unwrap();
        let fx = (x.dim > 0).then(|| a.face_unchecked(&SimplexRef::nondegenerate(x), i));
        (fx, y.map(SimplexRef::nondegenerate))
    } else {
        let y = y.unwrap();
        let j = i - (k + 1) as usize;
        let fy = (y.dim > 0).then(|| b.face_unchecked(&SimplexRef::nondegenerate(y), j));
        (x.map(SimplexRef::nondegenerate), fy)
    };
    let mut surj = Surjection::new();
    let mut offset = 0u8;
    if let Some(r) = &fx {
        surj.extend(r.surjection().iter().copied());
        offset = r.target().dim as u8 + 1;
    }
    if let Some(r) = &fy {
        surj.extend(r.surjection().iter().map(|&v| v + offset));
    }
    let id = index[&(fx.map(|r| r.target()), fy.map(|r| r.target()))];
    SimplexRef::from_parts(id, surj)
}

pub fn join(a: &StratifiedComplex, b: &StratifiedComplex) -> StratifiedComplex {
    Join::new(a, b).into_complex()
}
