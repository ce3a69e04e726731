//! Small named categories used by tests, examples and the CLI.

use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::omega::{OmegaCat, OmegaCatBuilder};

/// Names accepted by [`omega`], prefixed with `@` on the command line.
pub const NAMES: [&str; 7] = [
    "poset2",
    "walking-iso",
    "two-cell",
    "invertible-two-cell",
    "cyclic3",
    "idempotent",
    "walking-arrow",
];

/// The poset `0 < 1 < 2`.
pub fn poset2() -> FiniteCategory {
    FiniteCategory::from_labels(
        &["0", "1", "2"],
        &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")],
        &[("b", "a", "c")],
    )
    .expect("valid fixture")
}

pub fn walking_arrow() -> FiniteCategory {
    FiniteCategory::from_labels(&["0", "1"], &[("f", "0", "1")], &[]).expect("valid fixture")
}

/// Two objects and mutually inverse arrows `f`, `g`.
pub fn walking_iso() -> FiniteCategory {
    FiniteCategory::from_labels(
        &["0", "1"],
        &[("f", "0", "1"), ("g", "1", "0")],
        &[("g", "f", "id_0"), ("f", "g", "id_1")],
    )
    .expect("valid fixture")
}

/// The cyclic group of order 3 as a one-object category.
pub fn cyclic3() -> FiniteCategory {
    FiniteCategory::from_labels(
        &["*"],
        &[("r", "*", "*"), ("r2", "*", "*")],
        &[
            ("r", "r", "r2"),
            ("r", "r2", "id_*"),
            ("r2", "r", "id_*"),
            ("r2", "r2", "r"),
        ],
    )
    .expect("valid fixture")
}

/// The monoid `{1, e}` with `e² = e`.
pub fn idempotent() -> FiniteCategory {
    FiniteCategory::from_labels(&["*"], &[("e", "*", "*")], &[("e", "e", "e")]).expect("valid fixture")
}

fn two_cell_builder() -> OmegaCatBuilder {
    let mut b = OmegaCatBuilder::new(2);
    b.object("x").and_then(|b| b.object("y")).expect("fresh labels");
    b.cell("f", "x", "y").and_then(|b| b.cell("g", "x", "y")).expect("parallel");
    b.cell("α", "f", "g").expect("parallel");
    b
}

/// Objects `x`, `y`, arrows `f, g : x → y` and one 2-cell `α : f ⇒ g`.
pub fn two_cell() -> OmegaCat {
    two_cell_builder().build().expect("valid fixture")
}

/// As [`two_cell`], with an inverse `β : g ⇒ f` of `α`.
pub fn invertible_two_cell() -> OmegaCat {
    let mut b = two_cell_builder();
    b.cell("β", "g", "f").expect("parallel");
    b.compose(1, "β", "α", "f").expect("known labels");
    b.compose(1, "α", "β", "g").expect("known labels");
    b.build().expect("valid fixture")
}

/// The named fixture as an ω-category.
pub fn omega(name: &str) -> Result<OmegaCat> {
    let from = |c: FiniteCategory| OmegaCat::from_category(&c);
    match name {
        "poset2" => from(poset2()),
        "walking-iso" => from(walking_iso()),
        "walking-arrow" => from(walking_arrow()),
        "cyclic3" => from(cyclic3()),
        "idempotent" => from(idempotent()),
        "two-cell" => Ok(two_cell()),
        "invertible-two-cell" => Ok(invertible_two_cell()),
        other => Err(Error::InvalidParameters(format!(
            "unknown fixture `{other}` (known: {})",
            NAMES.join(", ")
        ))),
    }
}

/// The named fixture as a 1-category, when it is one.
pub fn category(name: &str) -> Result<FiniteCategory> {
    match name {
        "poset2" => Ok(poset2()),
        "walking-iso" => Ok(walking_iso()),
        "walking-arrow" => Ok(walking_arrow()),
        "cyclic3" => Ok(cyclic3()),
        "idempotent" => Ok(idempotent()),
        other => omega(other)?.to_category(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_is_valid() {
        for name in NAMES {
            let c = omega(name).unwrap();
            assert!(c.validate().is_empty(), "{name}");
        }
        assert_eq!(two_cell().len(), 5);
        assert_eq!(invertible_two_cell().len(), 6);
        assert!(category("two-cell").is_err());
    }
}
