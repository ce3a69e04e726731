//! Finite stratified simplicial sets in Eilenberg–Zilber normal form.
//!
//! Only nondegenerate simplices are stored. Every simplex, degenerate or
//! not, is addressed by a [`SimplexRef`]: a nondegenerate target together
//! with the monotone surjection through which it is degenerated. Face and
//! degeneracy evaluation normalizes on the fly, so two refs are equal
//! exactly when they name the same simplex.

use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use super::operator::{surjections, MonotoneMap};
use crate::error::{Error, Result};

/// Identifier of a nondegenerate simplex: its dimension and position within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

impl SimplexId {
    pub fn new(dim: usize, index: usize) -> Self {
        SimplexId { dim, index }
    }
}

impl fmt::Display for SimplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}.{}", self.dim, self.index)
    }
}

pub(crate) type Surjection = SmallVec<[u8; 8]>;

/// A simplex in Eilenberg–Zilber normal form.
///
/// The degeneracy is kept as the surjection `[m] -> [d]` from the simplex's
/// dimension onto its target's; [`SimplexRef::degeneracy_word`] recovers the
/// strictly decreasing word `s_{i_1} ... s_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    target: SimplexId,
    surjection: Surjection,
}

impl SimplexRef {
    pub fn nondegenerate(target: SimplexId) -> Self {
        SimplexRef {
            target,
            surjection: (0..=target.dim as u8).collect(),
        }
    }

    /// Builds `s_{i_1} s_{i_2} ... s_{i_k} x` from a strictly decreasing word.
    pub fn from_word(target: SimplexId, word: &[usize]) -> Result<Self> {
        if word.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameters(format!(
                "degeneracy word {word:?} is not strictly decreasing"
            )));
        }
        let m = target.dim + word.len();
        if let Some(&top) = word.first() {
            if top >= m {
                return Err(Error::InvalidParameters(format!(
                    "degeneracy s_{top} is out of range for a {m}-simplex"
                )));
            }
        }
        let mut surjection = Surjection::with_capacity(m + 1);
        let mut level = 0u8;
        surjection.push(0);
        for j in 0..m {
            if !word.contains(&j) {
                level += 1;
            }
            surjection.push(level);
        }
        Ok(SimplexRef { target, surjection })
    }

    pub(crate) fn from_parts(target: SimplexId, surjection: Surjection) -> Self {
        debug_assert_eq!(
            surjection.last().copied().unwrap_or(0) as usize,
            target.dim
        );
        SimplexRef { target, surjection }
    }

    pub fn target(&self) -> SimplexId {
        self.target
    }

    pub fn dim(&self) -> usize {
        self.surjection.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() != self.target.dim
    }

    pub fn surjection(&self) -> &[u8] {
        &self.surjection
    }

    /// The strictly decreasing degeneracy word; empty for nondegenerate simplices.
    pub fn degeneracy_word(&self) -> Vec<usize> {
        (0..self.dim())
            .rev()
            .filter(|&j| self.surjection[j] == self.surjection[j + 1])
            .collect()
    }

    /// Applies a degenerating surjection `[k] -> [dim]` on the right.
    pub(crate) fn degenerate_by(&self, theta: &[u8]) -> SimplexRef {
        SimplexRef {
            target: self.target,
            surjection: theta.iter().map(|&j| self.surjection[j as usize]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    pub faces: Vec<SimplexRef>,
    pub marked: bool,
}

/// Something wrong with a complex. Violations are data, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MarkedVertex { simplex: String },
    FaceCount { simplex: String, expected: usize, found: usize },
    DanglingFace { simplex: String, face: usize },
    FaceDimension { simplex: String, face: usize, expected: usize, found: usize },
    SimplicialIdentity { simplex: String, i: usize, j: usize },
    DuplicateLabel { label: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MarkedVertex { simplex } => write!(f, "marked 0-simplex `{simplex}`"),
            Violation::FaceCount {
                simplex,
                expected,
                found,
            } => write!(f, "`{simplex}` has {found} faces, expected {expected}"),
            Violation::DanglingFace { simplex, face } => {
                write!(f, "face {face} of `{simplex}` names no simplex")
            }
            Violation::FaceDimension {
                simplex,
                face,
                expected,
                found,
            } => write!(
                f,
                "face {face} of `{simplex}` has dimension {found}, expected {expected}"
            ),
            Violation::SimplicialIdentity { simplex, i, j } => write!(
                f,
                "simplicial identity d{i} d{j} = d{} d{i} fails on `{simplex}`",
                j - 1
            ),
            Violation::DuplicateLabel { label } => write!(f, "duplicate label `{label}`"),
        }
    }
}

/// A finite stratified simplicial set, truncated at `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedComplex {
    bound: usize,
    cells: Vec<Vec<Cell>>,
    labels: HashMap<String, SimplexId>,
}

impl StratifiedComplex {
    pub fn empty(bound: usize) -> Self {
        StratifiedComplex {
            bound,
            cells: vec![Vec::new(); bound + 1],
            labels: HashMap::new(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Largest dimension holding a nondegenerate simplex, if any.
    pub fn dimension(&self) -> Option<usize> {
        (0..=self.bound).rev().find(|&d| !self.cells[d].is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }

    pub fn cell(&self, id: SimplexId) -> &Cell {
        &self.cells[id.dim][id.index]
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        id.dim < self.cells.len() && id.index < self.cells[id.dim].len()
    }

    pub fn label(&self, id: SimplexId) -> &str {
        &self.cell(id).label
    }

    pub fn lookup(&self, label: &str) -> Option<SimplexId> {
        self.labels.get(label).copied()
    }

    pub fn id(&self, label: &str) -> Result<SimplexId> {
        self.lookup(label)
            .ok_or_else(|| Error::UnknownSimplex(label.to_string()))
    }

    /// The nondegenerate simplex named `label`, as a ref.
    pub fn simplex(&self, label: &str) -> Result<SimplexRef> {
        self.id(label).map(SimplexRef::nondegenerate)
    }

    pub fn faces(&self, id: SimplexId) -> &[SimplexRef] {
        &self.cell(id).faces
    }

    pub fn is_marked(&self, id: SimplexId) -> bool {
        self.cell(id).marked
    }

    /// Degenerate simplices are always thin.
    pub fn is_thin(&self, s: &SimplexRef) -> bool {
        s.is_degenerate() || self.is_marked(s.target)
    }

    /// Nondegenerate simplices of one dimension, in identifier order.
    pub fn ids(&self, dim: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.count(dim)).map(move |index| SimplexId { dim, index })
    }

    /// All nondegenerate simplices, dimension ascending.
    pub fn all_ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..=self.bound).flat_map(move |d| self.ids(d))
    }

    pub fn marked_ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.all_ids().filter(move |&id| self.is_marked(id))
    }

    /// Every `dim`-simplex, degenerate ones included: nondegenerate first,
    /// then by target dimension descending, target index, and surjection.
    pub fn simplices(&self, dim: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for d in (0..=dim.min(self.bound)).rev() {
            if self.cells[d].is_empty() {
                continue;
            }
            let surj = surjections(dim, d);
            for id in self.ids(d) {
                for s in &surj {
                    out.push(SimplexRef {
                        target: id,
                        surjection: s.iter().copied().collect(),
                    });
                }
            }
        }
        out
    }

    fn check_ref(&self, s: &SimplexRef) -> Result<()> {
        if !self.contains(s.target) {
            return Err(Error::UnknownSimplex(s.target.to_string()));
        }
        let surj = &s.surjection;
        let ok = surj.first() == Some(&0)
            && surj.last().map(|&v| v as usize) == Some(s.target.dim)
            && surj.windows(2).all(|w| w[1] >= w[0] && w[1] - w[0] <= 1);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "malformed degeneracy on {}",
                s.target
            )))
        }
    }

    /// `θ^* s` for an order-preserving `θ : [k] -> [dim s]`, in normal form.
    pub fn act(&self, s: &SimplexRef, theta: &MonotoneMap) -> Result<SimplexRef> {
        self.check_ref(s)?;
        if theta.target() != s.dim() {
            return Err(Error::InvalidParameters(format!(
                "operator {theta} does not act on a {}-simplex",
                s.dim()
            )));
        }
        let comp: Surjection = theta
            .values()
            .iter()
            .map(|&j| s.surjection[j])
            .collect();
        Ok(self.act_raw(s.target, comp))
    }

    /// Normalizes `comp^* x` where `comp : [k] -> [dim x]` is order-preserving.
    pub(crate) fn act_raw(&self, mut target: SimplexId, mut comp: Surjection) -> SimplexRef {
        loop {
            let d = target.dim;
            let mut expect = 0u8;
            for &v in comp.iter() {
                if v == expect {
                    expect += 1;
                } else if v > expect {
                    break;
                }
            }
            if expect as usize > d {
                return SimplexRef {
                    target,
                    surjection: comp,
                };
            }
            // comp misses vertex `expect`: pass to that face of the target
            let missing = expect;
            let face = &self.cells[d][target.index].faces[missing as usize];
            for v in comp.iter_mut() {
                let w = if *v > missing { *v - 1 } else { *v };
                *v = face.surjection[w as usize];
            }
            target = face.target;
        }
    }

    /// The `i`-th face of any simplex, in normal form.
    pub fn face(&self, s: &SimplexRef, i: usize) -> Result<SimplexRef> {
        let m = s.dim();
        if m == 0 || i > m {
            return Err(Error::IndexOutOfRange { index: i, dim: m });
        }
        self.check_ref(s)?;
        Ok(self.face_unchecked(s, i))
    }

    pub(crate) fn face_unchecked(&self, s: &SimplexRef, i: usize) -> SimplexRef {
        let m = s.dim();
        let comp: Surjection = (0..=m)
            .filter(|&j| j != i)
            .map(|j| s.surjection[j])
            .collect();
        self.act_raw(s.target, comp)
    }

    /// The `i`-th degeneracy `s_i` of any simplex.
    pub fn degeneracy(&self, s: &SimplexRef, i: usize) -> Result<SimplexRef> {
        let m = s.dim();
        if i > m {
            return Err(Error::IndexOutOfRange { index: i, dim: m });
        }
        self.check_ref(s)?;
        let theta: Surjection = (0..=m + 1)
            .map(|j| if j <= i { j as u8 } else { (j - 1) as u8 })
            .collect();
        Ok(s.degenerate_by(&theta))
    }

    /// The vertices of a simplex, in order (with repetitions for degenerate simplices).
    pub fn vertices(&self, s: &SimplexRef) -> Vec<SimplexId> {
        (0..=s.dim())
            .map(|j| {
                let comp: Surjection = smallvec::smallvec![s.surjection[j]];
                self.act_raw(s.target, comp).target
            })
            .collect()
    }

    /// Checks every structural invariant; an empty list means the complex is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for id in self.all_ids() {
            if seen.insert(self.label(id), ()).is_some() {
                out.push(Violation::DuplicateLabel {
                    label: self.label(id).to_string(),
                });
            }
        }
        let mut structural_ok = true;
        for id in self.all_ids() {
            let cell = self.cell(id);
            let name = || cell.label.clone();
            if id.dim == 0 {
                if cell.marked {
                    out.push(Violation::MarkedVertex { simplex: name() });
                }
                if !cell.faces.is_empty() {
                    structural_ok = false;
                    out.push(Violation::FaceCount {
                        simplex: name(),
                        expected: 0,
                        found: cell.faces.len(),
                    });
                }
                continue;
            }
            if cell.faces.len() != id.dim + 1 {
                structural_ok = false;
                out.push(Violation::FaceCount {
                    simplex: name(),
                    expected: id.dim + 1,
                    found: cell.faces.len(),
                });
                continue;
            }
            for (i, face) in cell.faces.iter().enumerate() {
                if self.check_ref(face).is_err() {
                    structural_ok = false;
                    out.push(Violation::DanglingFace {
                        simplex: name(),
                        face: i,
                    });
                } else if face.dim() != id.dim - 1 {
                    structural_ok = false;
                    out.push(Violation::FaceDimension {
                        simplex: name(),
                        face: i,
                        expected: id.dim - 1,
                        found: face.dim(),
                    });
                }
            }
        }
        if !structural_ok {
            return out;
        }
        // d_i d_j = d_{j-1} d_i for i < j, checked dimension ascending so that
        // face evaluation below a simplex is already known to be coherent
        for d in 2..=self.bound {
            for id in self.ids(d) {
                let faces = self.faces(id);
                'pairs: for j in 1..=d {
                    for i in 0..j {
                        let lhs = self.face_unchecked(&faces[j], i);
                        let rhs = self.face_unchecked(&faces[i], j - 1);
                        if lhs != rhs {
                            out.push(Violation::SimplicialIdentity {
                                simplex: self.label(id).to_string(),
                                i,
                                j,
                            });
                            break 'pairs;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Human-readable name of any simplex: the target label, prefixed by its degeneracy word.
    pub fn describe(&self, s: &SimplexRef) -> String {
        let word = s.degeneracy_word();
        if word.is_empty() {
            self.label(s.target).to_string()
        } else {
            let prefix: String = word.iter().map(|i| format!("s{i}")).collect();
            format!("{prefix}({})", self.label(s.target))
        }
    }

    /// Parses the notation produced by [`describe`](Self::describe).
    pub fn parse_ref(&self, text: &str) -> Result<SimplexRef> {
        let text = text.trim();
        if let Some(id) = self.lookup(text) {
            return Ok(SimplexRef::nondegenerate(id));
        }
        let bad = || Error::UnknownSimplex(text.to_string());
        let open = text.find('(').ok_or_else(bad)?;
        if !text.ends_with(')') {
            return Err(bad());
        }
        let prefix = &text[..open];
        let inner = &text[open + 1..text.len() - 1];
        let id = self.id(inner)?;
        let mut word = Vec::new();
        for part in prefix.split('s').skip(1) {
            word.push(part.parse::<usize>().map_err(|_| bad())?);
        }
        if !prefix.starts_with('s') || word.is_empty() {
            return Err(bad());
        }
        SimplexRef::from_word(id, &word)
    }

    /// Replaces the marking wholesale. Vertices in `marked` are recorded as given,
    /// so that [`validate`](Self::validate) can report them.
    pub fn with_marking(mut self, marked: impl Fn(SimplexId, &Self) -> bool) -> Self {
        let flags: Vec<Vec<bool>> = (0..=self.bound)
            .map(|d| self.ids(d).map(|id| marked(id, &self)).collect())
            .collect();
        for (d, row) in flags.into_iter().enumerate() {
            for (i, f) in row.into_iter().enumerate() {
                self.cells[d][i].marked = f;
            }
        }
        self
    }

    pub fn set_marked(&mut self, id: SimplexId, marked: bool) {
        self.cells[id.dim][id.index].marked = marked;
    }

    /// Same complex with a different truncation bound (never below the top simplex).
    pub fn with_bound(mut self, bound: usize) -> Result<Self> {
        if let Some(top) = self.dimension() {
            if bound < top {
                return Err(Error::InvalidParameters(format!(
                    "bound {bound} is below the top simplex dimension {top}"
                )));
            }
        }
        self.cells.resize(bound + 1, Vec::new());
        self.bound = bound;
        Ok(self)
    }

    /// Marking-forgetful copy with only degenerate simplices thin.
    pub fn flat(&self) -> Self {
        self.clone().with_marking(|_, _| false)
    }

    /// Copy with every positive-dimensional simplex thin.
    pub fn sharp(&self) -> Self {
        self.clone().with_marking(|id, _| id.dim > 0)
    }
}

/// Incremental construction of a complex. Faces must already exist.
#[derive(Debug)]
pub struct ComplexBuilder {
    complex: StratifiedComplex,
}

impl ComplexBuilder {
    pub fn new(bound: usize) -> Self {
        ComplexBuilder {
            complex: StratifiedComplex::empty(bound),
        }
    }

    pub fn bound(&self) -> usize {
        self.complex.bound
    }

    pub fn current(&self) -> &StratifiedComplex {
        &self.complex
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<SimplexId> {
        self.add(label, Vec::new(), false)
    }

    pub fn add_simplex(
        &mut self,
        label: impl Into<String>,
        faces: Vec<SimplexRef>,
    ) -> Result<SimplexId> {
        self.add(label, faces, false)
    }

    /// Adds a cell without checking its faces; `validate` reports problems later.
    pub fn add(
        &mut self,
        label: impl Into<String>,
        faces: Vec<SimplexRef>,
        marked: bool,
    ) -> Result<SimplexId> {
        let label = label.into();
        let dim = if faces.is_empty() { 0 } else { faces.len() - 1 };
        if dim > self.complex.bound {
            return Err(Error::InvalidParameters(format!(
                "`{label}` has dimension {dim} above the bound {}",
                self.complex.bound
            )));
        }
        if self.complex.labels.contains_key(&label) {
            return Err(Error::InvalidParameters(format!("duplicate label `{label}`")));
        }
        let id = SimplexId {
            dim,
            index: self.complex.cells[dim].len(),
        };
        self.complex.labels.insert(label.clone(), id);
        self.complex.cells[dim].push(Cell {
            label,
            faces,
            marked,
        });
        Ok(id)
    }

    /// Adds a cell whose face list has been fixed elsewhere; used when the
    /// dimension is known but the face list may be malformed.
    pub fn add_with_dim(
        &mut self,
        label: impl Into<String>,
        dim: usize,
        faces: Vec<SimplexRef>,
        marked: bool,
    ) -> Result<SimplexId> {
        let label = label.into();
        if dim > self.complex.bound {
            return Err(Error::InvalidParameters(format!(
                "`{label}` has dimension {dim} above the bound {}",
                self.complex.bound
            )));
        }
        if self.complex.labels.contains_key(&label) {
            return Err(Error::InvalidParameters(format!("duplicate label `{label}`")));
        }
        let id = SimplexId {
            dim,
            index: self.complex.cells[dim].len(),
        };
        self.complex.labels.insert(label.clone(), id);
        self.complex.cells[dim].push(Cell {
            label,
            faces,
            marked,
        });
        Ok(id)
    }

    pub fn mark(&mut self, id: SimplexId) {
        self.complex.cells[id.dim][id.index].marked = true;
    }

    pub fn build_unchecked(self) -> StratifiedComplex {
        self.complex
    }

    pub fn build(self) -> Result<StratifiedComplex> {
        let violations = self.complex.validate();
        if violations.is_empty() {
            Ok(self.complex)
        } else {
            Err(Error::InvalidComplex(violations))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn delta(n: usize) -> StratifiedComplex {
        shapes::standard(n)
    }

    #[test]
    fn word_round_trip() {
        let x = SimplexId::new(2, 0);
        for word in [vec![], vec![0], vec![2], vec![3, 1], vec![4, 2, 0]] {
            let r = SimplexRef::from_word(x, &word).unwrap();
            assert_eq!(r.degeneracy_word(), word);
            assert_eq!(r.dim(), 2 + word.len());
        }
        assert!(SimplexRef::from_word(x, &[1, 1]).is_err());
        assert!(SimplexRef::from_word(x, &[0, 1]).is_err());
        assert!(SimplexRef::from_word(x, &[3]).is_err());
    }

    #[test]
    fn face_of_degenerate_edge_is_its_vertex() {
        let d2 = delta(2);
        let v = d2.simplex("0").unwrap();
        let e = d2.degeneracy(&v, 0).unwrap();
        assert_eq!(d2.face(&e, 0).unwrap(), v);
        assert_eq!(d2.face(&e, 1).unwrap(), v);
    }

    #[test]
    fn faces_of_standard_triangle() {
        let d2 = delta(2);
        let top = d2.simplex("012").unwrap();
        assert_eq!(d2.face(&top, 1).unwrap(), d2.simplex("02").unwrap());
        assert_eq!(d2.face(&top, 0).unwrap(), d2.simplex("12").unwrap());
        assert!(matches!(
            d2.face(&top, 3),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        ));
    }

    #[test]
    fn face_zero_of_s1_top_is_s0_of_face_zero() {
        let d2 = delta(2);
        let top = d2.simplex("012").unwrap();
        let s1 = d2.degeneracy(&top, 1).unwrap();
        let lhs = d2.face(&s1, 0).unwrap();
        let rhs = d2.degeneracy(&d2.face(&top, 0).unwrap(), 0).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degeneracy_word(), vec![0]);
        assert_eq!(d2.label(lhs.target()), "12");
    }

    #[test]
    fn simplicial_identities_hold_exhaustively() {
        let d3 = delta(3);
        for m in 1..=5 {
            for s in d3.simplices(m) {
                for j in 0..=m {
                    for i in 0..j {
                        if m >= 2 {
                            let a = d3.face(&d3.face(&s, j).unwrap(), i).unwrap();
                            let b = d3.face(&d3.face(&s, i).unwrap(), j - 1).unwrap();
                            assert_eq!(a, b);
                        }
                    }
                    // d_i s_j and friends
                    for jj in 0..m {
                        let sj = d3.degeneracy(&s, jj).unwrap();
                        for ii in 0..=m + 1 {
                            let lhs = d3.face(&sj, ii).unwrap();
                            let rhs = if ii < jj {
                                d3.degeneracy(&d3.face(&s, ii).unwrap(), jj - 1).unwrap()
                            } else if ii == jj || ii == jj + 1 {
                                s.clone()
                            } else {
                                d3.degeneracy(&d3.face(&s, ii - 1).unwrap(), jj).unwrap()
                            };
                            assert_eq!(lhs, rhs, "d{ii} s{jj} on {}", d3.describe(&s));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn simplices_counts() {
        // Δ[1] has m + 2 simplices of dimension m: two constants and m + ... steps
        let d1 = delta(1);
        for m in 0..6 {
            assert_eq!(d1.simplices(m).len(), m + 2);
        }
    }

    #[test]
    fn valid_standard_and_marked_vertex() {
        assert!(delta(2).validate().is_empty());
        let bad = delta(2).with_marking(|id, c| c.label(id) == "0");
        let v = bad.validate();
        assert_eq!(v, vec![Violation::MarkedVertex { simplex: "0".into() }]);
        assert_eq!(v[0].to_string(), "marked 0-simplex `0`");
    }

    #[test]
    fn permuted_faces_break_identities() {
        let d3 = delta(3);
        let mut b = ComplexBuilder::new(3);
        for id in d3.all_ids() {
            let cell = d3.cell(id);
            let mut faces = cell.faces.clone();
            if id.dim == 3 {
                faces.swap(0, 1);
            }
            b.add(cell.label.clone(), faces, cell.marked).unwrap();
        }
        let violations = b.build_unchecked().validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            &violations[0],
            Violation::SimplicialIdentity { simplex, .. } if simplex == "0123"
        ));
    }

    #[test]
    fn parse_ref_round_trips() {
        let d2 = delta(2);
        for m in 0..4 {
            for s in d2.simplices(m) {
                assert_eq!(d2.parse_ref(&d2.describe(&s)).unwrap(), s);
            }
        }
        assert!(d2.parse_ref("s0(").is_err());
        assert!(d2.parse_ref("t0(01)").is_err());
    }

    #[test]
    fn vertices_of_degenerate_simplex() {
        let d2 = delta(2);
        let e = d2.simplex("02").unwrap();
        let s = d2.degeneracy(&e, 1).unwrap();
        let names: Vec<_> = d2.vertices(&s).iter().map(|&v| d2.label(v).to_string()).collect();
        assert_eq!(names, ["0", "2", "2"]);
    }
}
