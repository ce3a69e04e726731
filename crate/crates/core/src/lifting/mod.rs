//! Lifting problems and the properties defined by them.

pub mod checks;
pub mod engine;
pub mod equivalence;
pub mod homotopy;
pub mod quasi;

pub use checks::{
    check_generators, is_complicial, is_n_trivial, is_quasicategory, is_saturated,
    is_strict_complicial, n_triviality, saturation_specs, sphere_fillers, CheckReport, Failure,
    Mode, Property, Verdict, Witness,
};
pub use engine::{
    characteristic_map, enumerate_extensions, enumerate_maps, Engine, LiftingProblem, TargetIndex,
};
pub use equivalence::{
    detect_1_equivalences, detect_n_equivalences, equivalence_inclusion, is_1_equivalence,
    is_n_equivalence, translate_2_simplex, Translation,
};
pub use homotopy::{hom_complex, homotopic_maps};
pub use quasi::{homotopy_category, homotopy_category_with, HomotopyCategory, RelationVariant};
