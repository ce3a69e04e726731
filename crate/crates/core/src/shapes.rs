//! Named generator shapes and the generating families of inclusions.
//!
//! Vertices of every shape are labeled `0..n`; a face is labeled by its
//! vertices written in order (`"012"`), separated by dots once `n ≥ 10`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{ComplexBuilder, Inclusion, SimplexRef, StratifiedComplex};

/// Label of the face of `Δ[n]` with the given vertices.
pub fn face_label(vertices: &[usize], n: usize) -> String {
    let parts: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    if n >= 10 {
        parts.join(".")
    } else {
        parts.concat()
    }
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Faces of `Δ[n]` as vertex bitmasks, by dimension then lexicographically.
fn faces_by_dimension(n: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 1u64..(1u64 << (n + 1)) {
        out[mask.count_ones() as usize - 1].push(mask);
    }
    for row in &mut out {
        row.sort_by_key(|&m| vertices_of(m));
    }
    out
}

/// The subcomplex of `Δ[n]` on the faces selected by `keep` (which must be
/// closed under faces), marked where `marked` says so.
pub fn simplex_subcomplex(
    n: usize,
    keep: impl Fn(&[usize]) -> bool,
    marked: impl Fn(&[usize]) -> bool,
) -> StratifiedComplex {
    let mut builder = ComplexBuilder::new(n);
    let mut ids = HashMap::new();
    for (d, row) in faces_by_dimension(n).into_iter().enumerate() {
        for mask in row {
            let verts = vertices_of(mask);
            if !keep(&verts) {
                continue;
            }
            let faces = if d == 0 {
                Vec::new()
            } else {
                verts
                    .iter()
                    .map(|&v| SimplexRef::nondegenerate(ids[&(mask & !(1u64 << v))]))
                    .collect()
            };
            let id = builder
                .add_with_dim(face_label(&verts, n), d, faces, d > 0 && marked(&verts))
                .expect("face labels are distinct");
            ids.insert(mask, id);
        }
    }
    builder.build_unchecked()
}

/// `Δ[n]` with only degenerate simplices thin.
pub fn standard(n: usize) -> StratifiedComplex {
    simplex_subcomplex(n, |_| true, |_| false)
}

/// `∂Δ[n]`.
pub fn boundary(n: usize) -> StratifiedComplex {
    simplex_subcomplex(n, |v| v.len() <= n, |_| false)
}

fn in_horn(v: &[usize], n: usize, k: usize) -> bool {
    // every proper face except the k-th codimension-one face
    v.len() <= n && !(v.len() == n && !v.contains(&k))
}

/// The flat horn `Λ^k[n]`.
pub fn horn(n: usize, k: usize) -> Result<StratifiedComplex> {
    check_horn(n, k)?;
    Ok(simplex_subcomplex(n, |v| in_horn(v, n, k), |_| false))
}

fn check_horn(n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "horns need n >= 1 and 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn check_thinness(n: usize, k: usize) -> Result<()> {
    if n < 2 || k > n {
        return Err(Error::InvalidParameters(format!(
            "thinness extensions need n >= 2 and 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Whether a face of `Δ[n]` contains `{k-1, k, k+1} ∩ [n]`.
pub fn is_admissible_face(v: &[usize], n: usize, k: usize) -> bool {
    let required = [k.checked_sub(1), Some(k), Some(k + 1)];
    v.len() > 1
        && required
            .iter()
            .flatten()
            .filter(|&&r| r <= n)
            .all(|r| v.contains(r))
}

fn admissible_marking(n: usize, k: usize) -> impl Fn(&[usize]) -> bool {
    move |v| is_admissible_face(v, n, k)
}

/// The `k`-admissible `n`-simplex `Δ^k[n]`.
pub fn admissible(n: usize, k: usize) -> Result<StratifiedComplex> {
    check_horn(n, k)?;
    Ok(simplex_subcomplex(n, |_| true, admissible_marking(n, k)))
}

/// `Δ^k[n]'`: the `(k-1)`-st and `(k+1)`-st faces are marked as well.
pub fn primed(n: usize, k: usize) -> Result<StratifiedComplex> {
    check_thinness(n, k)?;
    let adm = admissible_marking(n, k);
    Ok(simplex_subcomplex(
        n,
        |_| true,
        move |v| {
            adm(v)
                || (v.len() == n
                    && [k.checked_sub(1), Some(k + 1)]
                        .iter()
                        .flatten()
                        .any(|&j| j <= n && !v.contains(&j)))
        },
    ))
}

/// `Δ^k[n]''`: every codimension-one face is marked as well.
pub fn double_primed(n: usize, k: usize) -> Result<StratifiedComplex> {
    check_thinness(n, k)?;
    let adm = admissible_marking(n, k);
    Ok(simplex_subcomplex(n, |_| true, move |v| adm(v) || v.len() == n))
}

/// `Δ[n]_t`: the top simplex is marked.
pub fn thin_top(n: usize) -> StratifiedComplex {
    simplex_subcomplex(n, |_| true, |v| v.len() == n + 1)
}

fn eq_marked(v: &[usize]) -> bool {
    v.len() >= 3 || v == [0, 2] || v == [1, 3]
}

/// `Δ[3]_eq`: all 2- and 3-simplices marked, along with the edges `02` and `13`.
pub fn delta3_eq() -> StratifiedComplex {
    simplex_subcomplex(3, |_| true, eq_marked)
}

/// `Δ[m] ⋆ Δ[3]_eq ⋆ Δ[n]` (or the maximally marked middle block when
/// `sharp`), written on the vertices of one simplex; `-1` means an empty side.
pub fn saturation_simplex(m: isize, n: isize, sharp: bool) -> Result<StratifiedComplex> {
    if m < -1 || n < -1 {
        return Err(Error::InvalidParameters(format!(
            "join parameters must be at least -1, got m = {m}, n = {n}"
        )));
    }
    let first = (m + 1) as usize;
    let total = (m + n + 5) as usize;
    Ok(simplex_subcomplex(
        total,
        |_| true,
        move |v| {
            let block: Vec<usize> = v
                .iter()
                .filter(|&&x| x >= first && x < first + 4)
                .map(|&x| x - first)
                .collect();
            if sharp {
                block.len() >= 2
            } else {
                !block.is_empty() && eq_marked(&block)
            }
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Standard { n: usize },
    /// `∂Δ[n] ↪ Δ[n]`.
    Boundary { n: usize },
    /// Flat `Λ^k[n] ↪ Δ[n]`.
    Horn { n: usize, k: usize },
    Admissible { n: usize, k: usize },
    /// `Λ^k[n] ↪ Δ^k[n]`, regular.
    AdmissibleHorn { n: usize, k: usize },
    Primed { n: usize, k: usize },
    /// `Δ^k[n]' ↪ Δ^k[n]''`, entire.
    DoublePrimed { n: usize, k: usize },
    /// `Δ[n] ↪ Δ[n]_t`.
    ThinTop { n: usize },
    Delta3Eq,
    /// `Δ[3]_eq ↪ Δ[3]♯`.
    Delta3Sharp,
    /// `Δ[m] ⋆ Δ[3]_eq ⋆ Δ[n] ↪ Δ[m] ⋆ Δ[3]♯ ⋆ Δ[n]`.
    Saturation { m: isize, n: isize },
    Flat { n: usize },
    Sharp { n: usize },
}

impl GeneratorSpec {
    /// Dimension of the (co)domain simplex.
    pub fn dimension(&self) -> usize {
        match *self {
            GeneratorSpec::Standard { n }
            | GeneratorSpec::Boundary { n }
            | GeneratorSpec::Horn { n, .. }
            | GeneratorSpec::Admissible { n, .. }
            | GeneratorSpec::AdmissibleHorn { n, .. }
            | GeneratorSpec::Primed { n, .. }
            | GeneratorSpec::DoublePrimed { n, .. }
            | GeneratorSpec::ThinTop { n }
            | GeneratorSpec::Flat { n }
            | GeneratorSpec::Sharp { n } => n,
            GeneratorSpec::Delta3Eq | GeneratorSpec::Delta3Sharp => 3,
            GeneratorSpec::Saturation { m, n } => (m + n + 5).max(0) as usize,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Standard { n } => write!(f, "Δ[{n}]"),
            GeneratorSpec::Boundary { n } => write!(f, "∂Δ[{n}] ↪ Δ[{n}]"),
            GeneratorSpec::Horn { n, k } => write!(f, "Λ^{k}[{n}] ↪ Δ[{n}]"),
            GeneratorSpec::Admissible { n, k } => write!(f, "Δ^{k}[{n}]"),
            GeneratorSpec::AdmissibleHorn { n, k } => write!(f, "Λ^{k}[{n}] ↪ Δ^{k}[{n}]"),
            GeneratorSpec::Primed { n, k } => write!(f, "Δ^{k}[{n}]'"),
            GeneratorSpec::DoublePrimed { n, k } => write!(f, "Δ^{k}[{n}]' ↪ Δ^{k}[{n}]''"),
            GeneratorSpec::ThinTop { n } => write!(f, "Δ[{n}] ↪ Δ[{n}]_t"),
            GeneratorSpec::Delta3Eq => write!(f, "Δ[3]_eq"),
            GeneratorSpec::Delta3Sharp => write!(f, "Δ[3]_eq ↪ Δ[3]♯"),
            GeneratorSpec::Saturation { m, n } => {
                write!(f, "Δ[{m}] ⋆ Δ[3]_eq ⋆ Δ[{n}] ↪ Δ[{m}] ⋆ Δ[3]♯ ⋆ Δ[{n}]")
            }
            GeneratorSpec::Flat { n } => write!(f, "Δ[{n}]♭"),
            GeneratorSpec::Sharp { n } => write!(f, "Δ[{n}]♯"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Generated {
    Complex(StratifiedComplex),
    Inclusion(Inclusion),
}

fn include(u: StratifiedComplex, v: StratifiedComplex) -> Result<Generated> {
    Inclusion::by_labels(Arc::new(u), Arc::new(v)).map(Generated::Inclusion)
}

pub fn make(spec: &GeneratorSpec) -> Result<Generated> {
    use GeneratorSpec as G;
    match *spec {
        G::Standard { n } | G::Flat { n } => Ok(Generated::Complex(standard(n))),
        G::Sharp { n } => Ok(Generated::Complex(standard(n).sharp())),
        G::Boundary { n } => include(boundary(n), standard(n)),
        G::Horn { n, k } => include(horn(n, k)?, standard(n)),
        G::Admissible { n, k } => admissible(n, k).map(Generated::Complex),
        G::AdmissibleHorn { n, k } => {
            let v = admissible(n, k)?;
            let u = simplex_subcomplex(n, |s| in_horn(s, n, k), admissible_marking(n, k));
            include(u, v)
        }
        G::Primed { n, k } => primed(n, k).map(Generated::Complex),
        G::DoublePrimed { n, k } => include(primed(n, k)?, double_primed(n, k)?),
        G::ThinTop { n } => {
            if n == 0 {
                return Err(Error::InvalidParameters(
                    "a 0-simplex cannot be marked".to_string(),
                ));
            }
            include(standard(n), thin_top(n))
        }
        G::Delta3Eq => Ok(Generated::Complex(delta3_eq())),
        G::Delta3Sharp => include(delta3_eq(), standard(3).sharp()),
        G::Saturation { m, n } => {
            include(saturation_simplex(m, n, false)?, saturation_simplex(m, n, true)?)
        }
    }
}

/// Like [`make`], but insists on an inclusion.
pub fn make_inclusion(spec: &GeneratorSpec) -> Result<Inclusion> {
    match make(spec)? {
        Generated::Inclusion(i) => Ok(i),
        Generated::Complex(_) => Err(Error::InvalidParameters(format!(
            "{spec} is a complex, not an inclusion"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Boundary inclusions and thin-top markings.
    I,
    /// Admissible horns and thinness extensions.
    J,
    /// `Δ[r] ↪ Δ[r]_t` for `r > n`.
    Ktr(usize),
    /// Saturation inclusions `Δ[m] ⋆ Δ[3]_eq ⋆ Δ[n] ↪ Δ[m] ⋆ Δ[3]♯ ⋆ Δ[n]`.
    Ks,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub spec: GeneratorSpec,
    pub inclusion: Inclusion,
}

/// Specs of a family with shape dimension at most `bound`, in canonical order.
pub fn family_specs(family: Family, bound: usize) -> Vec<GeneratorSpec> {
    use GeneratorSpec as G;
    let mut out = Vec::new();
    match family {
        Family::I => {
            out.extend((0..=bound).map(|n| G::Boundary { n }));
            out.extend((1..=bound).map(|n| G::ThinTop { n }));
        }
        Family::J => {
            for n in 1..=bound {
                out.extend((0..=n).map(|k| G::AdmissibleHorn { n, k }));
                if n >= 2 {
                    out.extend((0..=n).map(|k| G::DoublePrimed { n, k }));
                }
            }
        }
        Family::Ktr(n) => out.extend((n + 1..=bound).map(|r| G::ThinTop { n: r })),
        Family::Ks => {
            for total in 3..=bound as isize {
                for m in -1..=total - 4 {
                    out.push(G::Saturation { m, n: total - 5 - m });
                }
            }
        }
    }
    out
}

pub fn family(family: Family, bound: usize) -> Result<Vec<FamilyMember>> {
    family_specs(family, bound)
        .into_iter()
        .map(|spec| {
            make_inclusion(&spec).map(|inclusion| FamilyMember { spec, inclusion })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{join, InclusionKind};

    fn thin(x: &StratifiedComplex) -> Vec<String> {
        x.marked_ids().map(|id| x.label(id).to_string()).collect()
    }

    #[test]
    fn standard_counts_are_binomial() {
        let d4 = standard(4);
        assert_eq!(d4.counts(), vec![5, 10, 10, 5, 1]);
        assert!(d4.validate().is_empty());
        assert_eq!(standard(11).label(standard(11).ids(1).next().unwrap()), "0.1");
    }

    #[test]
    fn admissible_markings() {
        assert_eq!(thin(&admissible(2, 1).unwrap()), ["012"]);
        assert_eq!(thin(&admissible(2, 0).unwrap()), ["01", "012"]);
        let d4 = admissible(4, 2).unwrap();
        let marked = thin(&d4);
        assert!(marked.contains(&"123".to_string()));
        assert!(!marked.contains(&"0234".to_string()));
        assert!(!marked.contains(&"0124".to_string()));
        // oracle: filter every nondegenerate face by vertex containment
        let expected: Vec<String> = d4
            .all_ids()
            .map(|id| d4.label(id).to_string())
            .filter(|l| ["1", "2", "3"].iter().all(|v| l.contains(v)))
            .collect();
        assert_eq!(marked, expected);
    }

    #[test]
    fn admissibility_is_upward_closed() {
        for n in 1..6 {
            for k in 0..=n {
                let x = admissible(n, k).unwrap();
                for id in x.all_ids().filter(|&id| id.dim > 0) {
                    if !x.is_marked(id) {
                        for f in x.faces(id) {
                            assert!(!x.is_thin(f) || f.is_degenerate());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primed_markings_nest() {
        for n in 2..6 {
            for k in 0..=n {
                let (a, p, pp) = (
                    admissible(n, k).unwrap(),
                    primed(n, k).unwrap(),
                    double_primed(n, k).unwrap(),
                );
                for id in a.all_ids() {
                    assert!(!a.is_marked(id) || p.is_marked(id));
                    assert!(!p.is_marked(id) || pp.is_marked(id));
                }
                assert!(p.marked_ids().count() < pp.marked_ids().count());
            }
        }
        let p = primed(3, 1).unwrap();
        assert!(p.is_marked(p.id("123").unwrap()));
        assert!(p.is_marked(p.id("013").unwrap()));
        assert!(!p.is_marked(p.id("023").unwrap()));
    }

    #[test]
    fn family_kinds() {
        for member in family(Family::J, 4).unwrap() {
            match member.spec {
                GeneratorSpec::AdmissibleHorn { .. } => {
                    assert_eq!(member.inclusion.kind(), InclusionKind::Regular)
                }
                _ => assert_eq!(member.inclusion.kind(), InclusionKind::Entire),
            }
        }
        for member in family(Family::I, 3).unwrap() {
            assert!(member.inclusion.is_regular() || member.inclusion.is_entire());
        }
        for member in family(Family::Ks, 5).unwrap() {
            assert_eq!(member.inclusion.kind(), InclusionKind::Entire);
        }
    }

    #[test]
    fn family_listings() {
        use GeneratorSpec as G;
        let j2 = family_specs(Family::J, 2);
        assert_eq!(
            j2,
            vec![
                G::AdmissibleHorn { n: 1, k: 0 },
                G::AdmissibleHorn { n: 1, k: 1 },
                G::AdmissibleHorn { n: 2, k: 0 },
                G::AdmissibleHorn { n: 2, k: 1 },
                G::AdmissibleHorn { n: 2, k: 2 },
                G::DoublePrimed { n: 2, k: 0 },
                G::DoublePrimed { n: 2, k: 1 },
                G::DoublePrimed { n: 2, k: 2 },
            ]
        );
        assert_eq!(
            family_specs(Family::Ktr(1), 3),
            vec![G::ThinTop { n: 2 }, G::ThinTop { n: 3 }]
        );
        assert_eq!(family_specs(Family::Ks, 3), vec![G::Saturation { m: -1, n: -1 }]);
        assert_eq!(
            family_specs(Family::Ks, 4),
            vec![
                G::Saturation { m: -1, n: -1 },
                G::Saturation { m: -1, n: 0 },
                G::Saturation { m: 0, n: -1 },
            ]
        );
    }

    #[test]
    fn saturation_simplex_matches_join() {
        for (m, n) in [(-1, -1), (0, -1), (-1, 0), (0, 0), (1, -1), (-1, 1)] {
            let direct = saturation_simplex(m, n, false).unwrap();
            let side = |k: isize| {
                if k < 0 {
                    StratifiedComplex::empty(0)
                } else {
                    standard(k as usize)
                }
            };
            let joined = join(&join(&side(m), &delta3_eq()), &side(n));
            let direct_marked: Vec<usize> = (1..=direct.bound())
                .map(|d| direct.ids(d).filter(|&id| direct.is_marked(id)).count())
                .collect();
            let joined_marked: Vec<usize> = (1..=direct.bound())
                .map(|d| joined.ids(d).filter(|&id| joined.is_marked(id)).count())
                .collect();
            assert_eq!(direct.counts()[..], joined.counts()[..=direct.bound()]);
            assert_eq!(direct_marked, joined_marked, "m = {m}, n = {n}");
        }
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(make(&GeneratorSpec::Horn { n: 0, k: 0 }).is_err());
        assert!(make(&GeneratorSpec::AdmissibleHorn { n: 2, k: 3 }).is_err());
        assert!(make(&GeneratorSpec::DoublePrimed { n: 1, k: 0 }).is_err());
        assert!(make(&GeneratorSpec::Saturation { m: -2, n: 0 }).is_err());
        assert!(make(&GeneratorSpec::ThinTop { n: 0 }).is_err());
    }
}
