//! Street nerves of finite ω-categories.
//!
//! An `n`-simplex is an ω-functor `𝒪_n → C`. Since `𝒪_n` is free on its
//! atoms, a simplex is stored as the value of each atom, indexed by the
//! nonempty vertex subsets of `[n]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::lifting::{sphere_fillers, CheckReport};
use crate::omega::OmegaCat;
use crate::orientals::{atom, build_oriental_capped, Face, Oriental};
use crate::simplicial::{ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex};

/// Values of an ω-functor `𝒪_n → C` on atoms; `values[mask - 1]` is the
/// value on the face with that vertex bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveSimplex {
    arity: usize,
    values: Vec<usize>,
}

impl NerveSimplex {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, face: Face) -> usize {
        self.values[face.mask() as usize - 1]
    }

    /// Value on the top atom.
    pub fn top(&self) -> usize {
        self.value(Face::full(self.arity))
    }

    /// Precomposition with the map on vertices `f : [m] → [arity]`.
    fn reindex(&self, m: usize, f: impl Fn(usize) -> usize) -> NerveSimplex {
        let values = (1u32..(1 << (m + 1)))
            .map(|mask| {
                let image = Face::from_mask(mask).expect("nonempty").relabel(&f);
                self.value(image)
            })
            .collect();
        NerveSimplex { arity: m, values }
    }

    pub fn face(&self, i: usize) -> NerveSimplex {
        self.reindex(self.arity - 1, |v| if v >= i { v + 1 } else { v })
    }

    pub fn degeneracy(&self, i: usize) -> NerveSimplex {
        self.reindex(self.arity + 1, |v| if v > i { v - 1 } else { v })
    }
}

type Rule = Arc<dyn Fn(&OmegaCat, &NerveSimplex) -> bool + Send + Sync>;

/// Which nondegenerate simplices of positive dimension are marked.
#[derive(Clone)]
pub enum Stratification {
    /// Simplices sending the top atom to a cell of lower dimension.
    Identity,
    /// 1-trivial, with the isomorphisms of a 1-category marked.
    Saturated1,
    /// 2-trivial, with invertible 2-cells and 1-cell equivalences of a 2-category marked.
    Saturated2,
    Custom { name: String, rule: Rule },
}

impl Stratification {
    pub fn custom(name: &str, rule: impl Fn(&OmegaCat, &NerveSimplex) -> bool + Send + Sync + 'static) -> Self {
        Stratification::Custom {
            name: name.to_string(),
            rule: Arc::new(rule),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Stratification::Identity => "identity",
            Stratification::Saturated1 => "saturated1",
            Stratification::Saturated2 => "saturated2",
            Stratification::Custom { name, .. } => name,
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "identity" => Ok(Stratification::Identity),
            "saturated1" => Ok(Stratification::Saturated1),
            "saturated2" => Ok(Stratification::Saturated2),
            other => Err(Error::InvalidParameters(format!(
                "unknown stratification `{other}` (expected identity, saturated1 or saturated2)"
            ))),
        }
    }
}

impl fmt::Debug for Stratification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The nerve as a complex, with the functor behind each nondegenerate simplex.
#[derive(Clone, Debug)]
pub struct Nerve {
    complex: StratifiedComplex,
    simplices: Vec<Vec<NerveSimplex>>,
    stratification: String,
}

impl Nerve {
    pub fn complex(&self) -> &StratifiedComplex {
        &self.complex
    }

    pub fn into_complex(self) -> StratifiedComplex {
        self.complex
    }

    pub fn simplex(&self, id: SimplexId) -> &NerveSimplex {
        &self.simplices[id.dim][id.index]
    }

    pub fn stratification(&self) -> &str {
        &self.stratification
    }
}

/// Default dimension bound for the nerve of an `n`-category.
pub fn default_bound(c: &OmegaCat) -> usize {
    c.dimension() + 2
}

/// For each dimension `d ≤ bound`, the source and target of the top atom of
/// `𝒪_d` in a form that can be evaluated from lower atoms.
struct Boundaries {
    orientals: Vec<Oriental>,
    /// `(source cell, target cell)` of the top atom, by dimension `d ≥ 1`.
    top: Vec<Option<(usize, usize)>>,
}

impl Boundaries {
    fn new(bound: usize, budget: &mut Budget) -> Result<Self> {
        let mut orientals = Vec::new();
        let mut top = Vec::new();
        for d in 0..=bound {
            let o = build_oriental_capped(d, bound.max(crate::orientals::DEFAULT_MAX_N), budget)?;
            let a = atom(Face::full(d));
            top.push(if d == 0 {
                None
            } else {
                let pos = |c| o.position(&c).expect("boundaries are cells");
                Some((pos(a.source(d - 1)), pos(a.target(d - 1))))
            });
            orientals.push(o);
        }
        Ok(Boundaries { orientals, top })
    }

    /// Evaluates the source and target of the atom on `face` given the
    /// values of the current partial simplex on its proper faces.
    fn boundary_values(&self, c: &OmegaCat, face: Face, values: &[Option<usize>]) -> Option<(usize, usize)> {
        let d = face.dim();
        let (s, t) = self.top[d]?;
        let verts = face.vertices();
        let lookup = |f: Face| values[f.relabel(|v| verts[v]).mask() as usize - 1];
        let compose = |k: usize, a: &usize, b: &usize| c.compose(k, *a, *b);
        let o = &self.orientals[d];
        Some((o.evaluate(s, &lookup, &compose)?, o.evaluate(t, &lookup, &compose)?))
    }
}

/// Every ω-functor `𝒪_n → C`, in search order.
fn simplices_of_arity(
    c: &OmegaCat,
    n: usize,
    boundaries: &Boundaries,
    budget: &mut Budget,
) -> Result<Vec<NerveSimplex>> {
    let faces = crate::orientals::faces(n);
    let by_dim: Vec<Vec<usize>> = (0..=n).map(|d| (0..c.len()).filter(|&x| c.cell_dimension(x) <= d).collect()).collect();
    let mut values: Vec<Option<usize>> = vec![None; (1 << (n + 1)) - 1];
    let mut out = Vec::new();
    fill(c, &faces, 0, &by_dim, boundaries, &mut values, &mut out, budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    c: &OmegaCat,
    faces: &[Face],
    next: usize,
    by_dim: &[Vec<usize>],
    boundaries: &Boundaries,
    values: &mut Vec<Option<usize>>,
    out: &mut Vec<NerveSimplex>,
    budget: &mut Budget,
) -> Result<()> {
    let Some(&face) = faces.get(next) else {
        let n = faces.last().map_or(0, |f| f.dim());
        out.push(NerveSimplex {
            arity: n,
            values: values.iter().map(|v| v.expect("complete")).collect(),
        });
        return Ok(());
    };
    let d = face.dim();
    let wanted = if d == 0 {
        None
    } else {
        match boundaries.boundary_values(c, face, values) {
            Some(st) => Some(st),
            None => return Ok(()),
        }
    };
    for &x in &by_dim[d] {
        budget.tick()?;
        if let Some((s, t)) = wanted {
            if c.source(d - 1, x) != s || c.target(d - 1, x) != t {
                continue;
            }
        }
        values[face.mask() as usize - 1] = Some(x);
        fill(c, faces, next + 1, by_dim, boundaries, values, out, budget)?;
    }
    values[face.mask() as usize - 1] = None;
    Ok(())
}

fn label(c: &OmegaCat, s: &NerveSimplex) -> String {
    if s.arity == 0 {
        c.label(s.values[0]).to_string()
    } else {
        let parts: Vec<&str> = s.values.iter().map(|&x| c.label(x)).collect();
        format!("<{}>", parts.join(","))
    }
}

struct Marker<'a> {
    c: &'a OmegaCat,
    stratification: &'a Stratification,
    isos: Vec<bool>,
    equivalences: Vec<bool>,
    invertible_2: Vec<bool>,
}

impl<'a> Marker<'a> {
    fn new(c: &'a OmegaCat, stratification: &'a Stratification) -> Result<Self> {
        let mut isos = vec![false; c.len()];
        let mut equivalences = vec![false; c.len()];
        let mut invertible_2 = vec![false; c.len()];
        match stratification {
            Stratification::Saturated1 => {
                for x in c.detect_isos_1()? {
                    isos[x] = true;
                }
            }
            Stratification::Saturated2 => {
                let e = c.detect_equivalences_2()?;
                for x in e.equivalences {
                    equivalences[x] = true;
                }
                for x in e.invertible_2_cells {
                    invertible_2[x] = true;
                }
            }
            _ => {}
        }
        Ok(Marker {
            c,
            stratification,
            isos,
            equivalences,
            invertible_2,
        })
    }

    fn marked(&self, s: &NerveSimplex) -> bool {
        let n = s.arity;
        if n == 0 {
            return false;
        }
        match self.stratification {
            Stratification::Identity => self.c.cell_dimension(s.top()) < n,
            Stratification::Saturated1 => n >= 2 || self.isos[s.top()],
            Stratification::Saturated2 => match n {
                1 => self.equivalences[s.top()],
                2 => self.invertible_2[s.top()],
                _ => true,
            },
            Stratification::Custom { rule, .. } => rule(self.c, s),
        }
    }
}

/// The nerve of `c` up to dimension `bound`.
pub fn nerve(
    c: &OmegaCat,
    bound: usize,
    stratification: &Stratification,
    budget: &mut Budget,
) -> Result<Nerve> {
    if let Some(v) = c.validate().first() {
        return Err(Error::InvalidOmegaCat(v.to_string()));
    }
    let marker = Marker::new(c, stratification)?;
    let boundaries = Boundaries::new(bound, budget)?;
    let mut builder = ComplexBuilder::new(bound);
    let mut simplices: Vec<Vec<NerveSimplex>> = Vec::new();
    let mut normal: Vec<HashMap<NerveSimplex, SimplexRef>> = Vec::new();
    for n in 0..=bound {
        let all = simplices_of_arity(c, n, &boundaries, budget)?;
        let mut table = HashMap::new();
        let mut nondegenerate = Vec::new();
        for s in all {
            let faces: Vec<SimplexRef> = if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| normal[n - 1][&s.face(i)].clone()).collect()
            };
            let degenerate = (0..n).find(|&i| s.face(i).degeneracy(i) == s);
            let entry = match degenerate {
                Some(i) => {
                    let sigma: Vec<u8> = (0..=n).map(|j| if j <= i { j as u8 } else { (j - 1) as u8 }).collect();
                    faces[i].degenerate_by(&sigma)
                }
                None => {
                    let id = builder.add_with_dim(label(c, &s), n, faces, marker.marked(&s))?;
                    nondegenerate.push(s.clone());
                    SimplexRef::nondegenerate(id)
                }
            };
            table.insert(s, entry);
        }
        normal.push(table);
        simplices.push(nondegenerate);
    }
    Ok(Nerve {
        complex: builder.build()?,
        simplices,
        stratification: stratification.name().to_string(),
    })
}

/// Unique fillers for every sphere `∂Δ[r] → N(c)` with `n + 1 < r ≤ bound`.
pub fn coskeletality_check(c: &OmegaCat, n: usize, bound: usize, budget: &mut Budget) -> Result<CheckReport> {
    if !c.is_n_category(n) {
        return Err(Error::Precondition(format!("not a {n}-category")));
    }
    let x = Arc::new(nerve(c, bound, &Stratification::Identity, budget)?.into_complex());
    sphere_fillers(&x, n, bound, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;

    fn poset2() -> OmegaCat {
        let cat = FiniteCategory::from_labels(
            &["0", "1", "2"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")],
            &[("b", "a", "c")],
        )
        .unwrap();
        OmegaCat::from_category(&cat).unwrap()
    }

    #[test]
    fn nerve_of_a_poset_is_its_classical_nerve() {
        let n = nerve(&poset2(), 4, &Stratification::Identity, &mut Budget::unlimited()).unwrap();
        assert_eq!(n.complex().counts(), vec![3, 3, 1, 0, 0]);
        assert!(n.complex().is_valid());
        let t = n.complex().ids(2).next().unwrap();
        assert!(n.complex().is_marked(t));
        assert_eq!(n.complex().marked_ids().count(), 1);
    }

    #[test]
    fn two_simplices_of_a_two_category() {
        let mut b = crate::omega::OmegaCatBuilder::new(2);
        b.object("x").unwrap().object("y").unwrap();
        b.cell("f", "x", "y").unwrap().cell("g", "x", "y").unwrap();
        b.cell("α", "f", "g").unwrap();
        let c = b.build().unwrap();
        let n = nerve(&c, 3, &Stratification::Identity, &mut Budget::unlimited()).unwrap();
        // the only nondegenerate triangles are α with an identity edge on either side
        let counts = n.complex().counts();
        assert_eq!(counts[0], 2);
        assert_eq!(counts[1], 2);
        assert!(n.complex().is_valid());
        let unmarked_triangles = n.complex().ids(2).filter(|&id| !n.complex().is_marked(id)).count();
        assert_eq!(unmarked_triangles, 2);
    }

    #[test]
    fn saturated_markings_of_the_walking_iso() {
        let cat = FiniteCategory::from_labels(
            &["0", "1"],
            &[("f", "0", "1"), ("g", "1", "0")],
            &[("g", "f", "id_0"), ("f", "g", "id_1")],
        )
        .unwrap();
        let c = OmegaCat::from_category(&cat).unwrap();
        let n = nerve(&c, 3, &Stratification::Saturated1, &mut Budget::unlimited()).unwrap();
        assert_eq!(n.complex().ids(1).filter(|&e| n.complex().is_marked(e)).count(), 2);
        let id = nerve(&c, 3, &Stratification::Identity, &mut Budget::unlimited()).unwrap();
        assert_eq!(id.complex().ids(1).filter(|&e| id.complex().is_marked(e)).count(), 0);
    }

    #[test]
    fn degeneracy_by_collapse() {
        let n = nerve(&poset2(), 2, &Stratification::Identity, &mut Budget::unlimited()).unwrap();
        let edge = n.simplex(SimplexId::new(1, 0)).clone();
        let d = edge.degeneracy(0);
        assert_eq!(d.face(0), edge);
        assert_eq!(d.face(1), edge);
        assert_eq!(d.face(2).arity(), 1);
    }
}
