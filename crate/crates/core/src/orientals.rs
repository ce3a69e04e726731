//! Orientals: the free strict `n`-category on the `n`-simplex.
//!
//! Faces of `Δ[n]` are vertex sets. A face's odd (resp. even) faces delete
//! the vertex in an odd (resp. even) position; for a set `S` of faces, `S⁻`
//! and `S⁺` are the unions of these. A cell is a pair `(M, P)` of nonempty
//! well-formed sets such that both `M` and `P` move `M` to `P`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::omega::{Level, OmegaCat, OmegaFunctor};
use crate::simplicial::MonotoneMap;

/// Largest `n` for which orientals are built unless a larger cap is passed.
pub const DEFAULT_MAX_N: usize = 4;

/// Faces are vertex bitmasks, so vertices stay below this.
pub const MAX_VERTICES: usize = 32;

/// A nonempty set of vertices, ordered by size and then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u32);

impl Face {
    pub fn from_mask(mask: u32) -> Result<Self> {
        if mask == 0 {
            return Err(Error::InvalidParameters("a face needs a vertex".to_string()));
        }
        Ok(Face(mask))
    }

    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::InvalidParameters(format!("vertex {v} is too large")));
            }
            mask |= 1 << v;
        }
        Face::from_mask(mask)
    }

    /// The face `{0, …, n}`.
    pub fn full(n: usize) -> Self {
        Face(((1u64 << (n + 1)) - 1) as u32)
    }

    pub fn vertex(v: usize) -> Self {
        Face(1 << v)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn vertices(self) -> Vec<usize> {
        (0..MAX_VERTICES).filter(|&v| self.0 & (1 << v) != 0).collect()
    }

    pub fn is_subface_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// The faces deleting vertices at positions of the given parity.
    fn faces_with_parity(self, odd: bool) -> impl Iterator<Item = Face> {
        let verts = self.vertices();
        let mask = self.0;
        let keep = verts.len() > 1;
        verts
            .into_iter()
            .enumerate()
            .filter(move |(pos, _)| keep && (pos % 2 == 1) == odd)
            .map(move |(_, v)| Face(mask & !(1 << v)))
    }

    pub fn odd_faces(self) -> Vec<Face> {
        self.faces_with_parity(true).collect()
    }

    pub fn even_faces(self) -> Vec<Face> {
        self.faces_with_parity(false).collect()
    }

    /// Relabels vertices along `f`, which must be injective on this face.
    pub fn relabel(self, f: impl Fn(usize) -> usize) -> Face {
        Face(self.vertices().into_iter().fold(0, |m, v| m | (1 << f(v))))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then_with(|| {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & diff & diff.wrapping_neg() != 0 {
                    // the first differing vertex belongs to `self`
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts = self.vertices();
        let sep = if verts.iter().any(|&v| v >= 10) { "." } else { "" };
        let parts: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Face {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("`{s}` is not a face"));
        let verts: Vec<usize> = if s.contains('.') {
            s.split('.').map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad());
        }
        Face::from_vertices(&verts)
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub type FaceSet = BTreeSet<Face>;

/// `S_k`.
pub fn of_dim(s: &FaceSet, k: usize) -> FaceSet {
    s.iter().copied().filter(|f| f.dim() == k).collect()
}

/// `|S|_k`; empty for `k < 0`.
pub fn up_to_dim(s: &FaceSet, k: isize) -> FaceSet {
    s.iter().copied().filter(|f| (f.dim() as isize) <= k).collect()
}

/// `S⁻`.
pub fn odd_faces(s: &FaceSet) -> FaceSet {
    s.iter().flat_map(|f| f.odd_faces()).collect()
}

/// `S⁺`.
pub fn even_faces(s: &FaceSet) -> FaceSet {
    s.iter().flat_map(|f| f.even_faces()).collect()
}

/// A pair of elements breaking well-formedness: two vertices, or two
/// distinct elements with a common source or a common target.
pub fn well_formed_violation(s: &FaceSet) -> Option<(Face, Face)> {
    let elems: Vec<Face> = s.iter().copied().collect();
    for (i, &x) in elems.iter().enumerate() {
        for &y in &elems[i + 1..] {
            if clash(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn clash(x: Face, y: Face) -> bool {
    if x.dim() != y.dim() {
        return false;
    }
    if x.dim() == 0 {
        return true;
    }
    let share = |a: Vec<Face>, b: Vec<Face>| a.iter().any(|f| b.contains(f));
    share(x.odd_faces(), y.odd_faces()) || share(x.even_faces(), y.even_faces())
}

pub fn is_well_formed(s: &FaceSet) -> bool {
    well_formed_violation(s).is_none()
}

/// `S` moves `M` to `P`: `M = (P ∪ S⁻) ∖ S⁺` and `P = (M ∪ S⁺) ∖ S⁻`.
pub fn moves(s: &FaceSet, m: &FaceSet, p: &FaceSet) -> bool {
    let (minus, plus) = (odd_faces(s), even_faces(s));
    let m2: FaceSet = p.union(&minus).copied().filter(|f| !plus.contains(f)).collect();
    let p2: FaceSet = m.union(&plus).copied().filter(|f| !minus.contains(f)).collect();
    m2 == *m && p2 == *p
}

/// A cell `(M, P)` of an oriental.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub m: FaceSet,
    pub p: FaceSet,
}

impl Cell {
    pub fn new(m: FaceSet, p: FaceSet) -> Result<Self> {
        let c = Cell { m, p };
        if c.is_valid() {
            Ok(c)
        } else {
            Err(Error::InvalidParameters(format!("{c} is not a cell")))
        }
    }

    pub fn is_valid(&self) -> bool {
        !self.m.is_empty()
            && !self.p.is_empty()
            && is_well_formed(&self.m)
            && is_well_formed(&self.p)
            && moves(&self.m, &self.m, &self.p)
            && moves(&self.p, &self.m, &self.p)
    }

    pub fn dim(&self) -> usize {
        self.m.iter().chain(&self.p).map(|f| f.dim()).max().unwrap_or(0)
    }

    /// `s_k(M, P) = (|M|_k, M_k ∪ |P|_{k−1})`.
    pub fn source(&self, k: usize) -> Cell {
        let mut p = of_dim(&self.m, k);
        p.extend(up_to_dim(&self.p, k as isize - 1));
        Cell {
            m: up_to_dim(&self.m, k as isize),
            p,
        }
    }

    /// `t_k(M, P) = (|M|_{k−1} ∪ P_k, |P|_k)`.
    pub fn target(&self, k: usize) -> Cell {
        let mut m = up_to_dim(&self.m, k as isize - 1);
        m.extend(of_dim(&self.p, k));
        Cell {
            m,
            p: up_to_dim(&self.p, k as isize),
        }
    }

    /// `c ∗_k d`, "`c` after `d`", defined when `s_k(c) = t_k(d)`.
    pub fn compose(&self, k: usize, d: &Cell) -> Result<Cell> {
        if self.source(k) != d.target(k) {
            return Err(Error::Undefined(format!("{self} ∗{k} {d}")));
        }
        let mut m = d.m.clone();
        m.extend(self.m.iter().copied().filter(|f| f.dim() != k));
        let mut p: FaceSet = d.p.iter().copied().filter(|f| f.dim() != k).collect();
        p.extend(self.p.iter().copied());
        Ok(Cell { m, p })
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize + Copy) -> Cell {
        Cell {
            m: self.m.iter().map(|x| x.relabel(f)).collect(),
            p: self.p.iter().map(|x| x.relabel(f)).collect(),
        }
    }

    /// The generating face when this is an atom.
    pub fn as_atom(&self) -> Option<Face> {
        let top: Vec<Face> = of_dim(&self.m, self.dim()).into_iter().collect();
        match top.as_slice() {
            [a] if atom(*a) == *self => Some(*a),
            _ => None,
        }
    }

    /// `a` for an atom, otherwise `M;P` with comma-separated faces.
    pub fn label(&self) -> String {
        match self.as_atom() {
            Some(a) => a.to_string(),
            None => self.to_string(),
        }
    }
}

fn join(s: &FaceSet) -> String {
    s.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", join(&self.m), join(&self.p))
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The cell generated by one face: `M_{i−1} = M_i⁻ ∖ M_i⁺`, `P_{i−1} = P_i⁺ ∖ P_i⁻`.
pub fn atom(a: Face) -> Cell {
    let mut m: FaceSet = [a].into();
    let mut p: FaceSet = [a].into();
    let (mut mi, mut pi) = (m.clone(), p.clone());
    for _ in 0..a.dim() {
        let next_m: FaceSet = odd_faces(&mi).difference(&even_faces(&mi)).copied().collect();
        let next_p: FaceSet = even_faces(&pi).difference(&odd_faces(&pi)).copied().collect();
        m.extend(&next_m);
        p.extend(&next_p);
        (mi, pi) = (next_m, next_p);
    }
    Cell { m, p }
}

/// Every face of `Δ[n]`, in face order.
pub fn faces(n: usize) -> Vec<Face> {
    let mut out: Vec<Face> = (1..(1u64 << (n + 1))).map(|m| Face(m as u32)).collect();
    out.sort();
    out
}

/// How a cell was first reached while closing the atoms under composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    Atom(Face),
    /// `left ∗_k right`, by cell index.
    Compose { k: usize, left: usize, right: usize },
}

#[derive(Clone, Debug)]
pub struct Oriental {
    n: usize,
    cells: Vec<Cell>,
    index: BTreeMap<Cell, usize>,
    derivations: Vec<Derivation>,
    omega: Arc<OmegaCat>,
}

impl Oriental {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cells ordered by dimension, then `(M, P)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn omega(&self) -> &Arc<OmegaCat> {
        &self.omega
    }

    pub fn position(&self, c: &Cell) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn derivation(&self, i: usize) -> Derivation {
        self.derivations[i]
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.n + 1];
        for c in &self.cells {
            out[c.dim()] += 1;
        }
        out
    }

    /// Evaluates a cell through its derivation, given values on atoms.
    /// `compose(k, a, b)` returns `None` when a composite is undefined.
    pub fn evaluate<T: Clone>(
        &self,
        cell: usize,
        atom_value: &impl Fn(Face) -> Option<T>,
        compose: &impl Fn(usize, &T, &T) -> Option<T>,
    ) -> Option<T> {
        match self.derivations[cell] {
            Derivation::Atom(a) => atom_value(a),
            Derivation::Compose { k, left, right } => {
                let l = self.evaluate(left, atom_value, compose)?;
                let r = self.evaluate(right, atom_value, compose)?;
                compose(k, &l, &r)
            }
        }
    }
}

/// Builds `𝒪_n` for `n ≤ DEFAULT_MAX_N`.
pub fn build_oriental(n: usize) -> Result<Oriental> {
    build_oriental_capped(n, DEFAULT_MAX_N, &mut Budget::default())
}

/// Closes the atoms of `Δ[n]` under all composites, then checks that the
/// result is closed under sources and targets.
pub fn build_oriental_capped(n: usize, max_n: usize, budget: &mut Budget) -> Result<Oriental> {
    if n > max_n || n + 1 >= MAX_VERTICES {
        return Err(Error::InvalidParameters(format!(
            "orientals are built up to n = {max_n}; raise the cap for n = {n}"
        )));
    }
    let mut found: BTreeMap<Cell, Derivation> = BTreeMap::new();
    let mut order: Vec<Cell> = Vec::new();
    for a in faces(n) {
        let c = atom(a);
        if found.insert(c.clone(), Derivation::Atom(a)).is_none() {
            order.push(c);
        }
    }
    // cells indexed by their k-targets, so only compatible pairs are tried
    let mut by_target: Vec<HashMap<Cell, Vec<usize>>> = vec![HashMap::new(); n];
    let mut done = 0;
    while done < order.len() {
        let end = order.len();
        for j in done..end {
            for (k, table) in by_target.iter_mut().enumerate() {
                table.entry(order[j].target(k)).or_default().push(j);
            }
        }
        for i in 0..end {
            for k in 0..n {
                let Some(partners) = by_target[k].get(&order[i].source(k)) else { continue };
                for &j in partners.clone().iter().filter(|&&j| i >= done || j >= done) {
                    budget.tick()?;
                    let e = order[i].compose(k, &order[j])?;
                    if !found.contains_key(&e) {
                        found.insert(
                            e.clone(),
                            Derivation::Compose {
                                k,
                                left: i,
                                right: j,
                            },
                        );
                        order.push(e);
                    }
                }
            }
        }
        done = end;
    }
    for c in &order {
        for k in 0..n {
            for b in [c.source(k), c.target(k)] {
                if !found.contains_key(&b) {
                    return Err(Error::InvalidOmegaCat(format!(
                        "boundary {b} of {c} is not a composite of atoms"
                    )));
                }
            }
        }
    }
    // reorder canonically, translating derivation indices
    let mut cells: Vec<Cell> = order.clone();
    cells.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    let index: BTreeMap<Cell, usize> = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let derivations: Vec<Derivation> = cells
        .iter()
        .map(|c| match found[c] {
            Derivation::Compose { k, left, right } => Derivation::Compose {
                k,
                left: index[&order[left]],
                right: index[&order[right]],
            },
            a => a,
        })
        .collect();
    let omega = Arc::new(omega_tables(n, &cells, &index)?);
    Ok(Oriental {
        n,
        cells,
        index,
        derivations,
        omega,
    })
}

fn omega_tables(n: usize, cells: &[Cell], index: &BTreeMap<Cell, usize>) -> Result<OmegaCat> {
    let labels: Vec<String> = cells.iter().map(|c| c.label()).collect();
    let mut levels = Vec::new();
    for k in 0..n {
        let mut level = Level::default();
        for c in cells {
            level.source.push(index[&c.source(k)]);
            level.target.push(index[&c.target(k)]);
        }
        let mut by_target: HashMap<usize, Vec<usize>> = HashMap::new();
        for (j, &t) in level.target.iter().enumerate() {
            by_target.entry(t).or_default().push(j);
        }
        for (i, c) in cells.iter().enumerate() {
            for &j in by_target.get(&level.source[i]).into_iter().flatten() {
                let e = c.compose(k, &cells[j])?;
                let e = index.get(&e).copied().ok_or_else(|| {
                    Error::InvalidOmegaCat(format!("composite {e} is missing"))
                })?;
                level.compose.insert((i, j), e);
            }
        }
        levels.push(level);
    }
    OmegaCat::from_tables(labels, levels)
}

/// All cells of `𝒪_n`, found directly from the cell condition: well-formed
/// sets `M` are grown one face at a time, with `P = (M ∪ M⁺) ∖ M⁻` forced.
pub fn enumerate_cells_search(n: usize, max_n: usize, budget: &mut Budget) -> Result<BTreeSet<Cell>> {
    if n > max_n || n + 1 >= MAX_VERTICES {
        return Err(Error::InvalidParameters(format!(
            "cell search runs up to n = {max_n}; raise the cap for n = {n}"
        )));
    }
    let all = faces(n);
    let mut out = BTreeSet::new();
    let mut chosen: Vec<Face> = Vec::new();
    grow(&all, 0, &mut chosen, &mut out, budget)?;
    Ok(out)
}

fn grow(
    all: &[Face],
    from: usize,
    chosen: &mut Vec<Face>,
    out: &mut BTreeSet<Cell>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if !chosen.is_empty() {
        let m: FaceSet = chosen.iter().copied().collect();
        let (minus, plus) = (odd_faces(&m), even_faces(&m));
        let p: FaceSet = m.union(&plus).copied().filter(|f| !minus.contains(f)).collect();
        let c = Cell { m, p };
        if c.is_valid() {
            out.insert(c);
        }
    }
    for i in from..all.len() {
        let f = all[i];
        if chosen.iter().any(|&g| clash(f, g)) {
            continue;
        }
        chosen.push(f);
        grow(all, i + 1, chosen, out, budget)?;
        chosen.pop();
    }
    Ok(())
}

/// The functor `𝒪_n → 𝒪_m` relabeling faces along an injective `φ : [n] → [m]`.
pub fn induced_functor(phi: &MonotoneMap, source: &Oriental, target: &Oriental) -> Result<OmegaFunctor> {
    if !phi.is_injective() {
        return Err(Error::InvalidParameters(format!(
            "{phi} is not injective; degeneracies act on nerves instead"
        )));
    }
    if phi.source() != source.n() || phi.target() != target.n() {
        return Err(Error::InvalidParameters(format!(
            "{phi} does not go from [{}] to [{}]",
            source.n(),
            target.n()
        )));
    }
    let map = source
        .cells()
        .iter()
        .map(|c| {
            let image = c.relabel(|v| phi.apply(v));
            target
                .position(&image)
                .ok_or_else(|| Error::InvalidOmegaCat(format!("{image} is not a cell of the target")))
        })
        .collect::<Result<Vec<_>>>()?;
    OmegaFunctor::new(source.omega().clone(), target.omega().clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(faces: &[&str]) -> FaceSet {
        faces.iter().map(|f| f.parse().unwrap()).collect()
    }

    #[test]
    fn face_order_and_parity() {
        let f: Face = "012".parse().unwrap();
        assert_eq!(f.odd_faces(), vec!["02".parse().unwrap()]);
        assert_eq!(odd_faces(&set(&["012"])), set(&["02"]));
        assert_eq!(even_faces(&set(&["012"])), set(&["01", "12"]));
        assert_eq!(odd_faces(&set(&["01"])), set(&["0"]));
        assert_eq!(even_faces(&set(&["0"])), set(&[]));
        let listed: Vec<String> = faces(2).iter().map(|f| f.to_string()).collect();
        assert_eq!(listed, ["0", "1", "2", "01", "02", "12", "012"]);
    }

    #[test]
    fn well_formedness() {
        assert!(is_well_formed(&set(&["01", "12"])));
        assert_eq!(
            well_formed_violation(&set(&["01", "02"])),
            Some(("01".parse().unwrap(), "02".parse().unwrap()))
        );
        assert!(!is_well_formed(&set(&["0", "1"])));
    }

    #[test]
    fn small_moves() {
        let v = set(&["0"]);
        assert!(moves(&v, &v, &v));
        assert!(moves(&set(&["012"]), &set(&["02"]), &set(&["01", "12"])));
    }

    #[test]
    fn atoms_of_low_faces() {
        assert_eq!(atom(Face::vertex(0)), Cell { m: set(&["0"]), p: set(&["0"]) });
        let a = atom("012".parse().unwrap());
        assert_eq!(a.m, set(&["012", "02", "0"]));
        assert_eq!(a.p, set(&["012", "01", "12", "2"]));
        assert!(a.is_valid());
        assert_eq!(a.source(5), a);
    }

    #[test]
    fn whiskered_composite_is_the_path() {
        let c = atom("12".parse().unwrap()).compose(0, &atom("01".parse().unwrap())).unwrap();
        assert_eq!(c, atom("012".parse().unwrap()).target(1));
        assert_eq!(c.label(), "(0,01,12;2,01,12)");
        assert!(atom("01".parse().unwrap()).compose(0, &atom("12".parse().unwrap())).is_err());
    }

    #[test]
    fn small_orientals() {
        let o2 = build_oriental(2).unwrap();
        assert_eq!(o2.counts(), vec![3, 4, 1]);
        assert!(o2.omega().validate().is_empty());
        let o3 = build_oriental(3).unwrap();
        assert_eq!(o3.counts(), vec![4, 11, 8, 1]);
        assert!(o3.omega().is_n_category(3));
        let search: Vec<Cell> = enumerate_cells_search(3, 4, &mut Budget::unlimited())
            .unwrap()
            .into_iter()
            .collect();
        let mut built = o3.cells().to_vec();
        built.sort();
        assert_eq!(search, built);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_oriental(5), Err(Error::InvalidParameters(_))));
        assert!(build_oriental_capped(5, 5, &mut Budget::unlimited()).is_ok());
    }

    #[test]
    fn relabeling_functors() {
        let o1 = build_oriental(1).unwrap();
        let o2 = build_oriental(2).unwrap();
        let delta1 = MonotoneMap::coface(2, 1);
        let f = induced_functor(&delta1, &o1, &o2).unwrap();
        let a01 = o1.position(&atom("01".parse().unwrap())).unwrap();
        assert_eq!(o2.cells()[f.apply(a01)], atom("02".parse().unwrap()));
        let id = induced_functor(&MonotoneMap::identity(2), &o2, &o2).unwrap();
        assert_eq!(id, OmegaFunctor::identity(o2.omega().clone()));
        let degenerate = MonotoneMap::codegeneracy(1, 0);
        assert!(induced_functor(&degenerate, &o2, &o1).is_err());
    }
}
