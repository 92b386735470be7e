//! Attainable partitions and the class groups they describe.
//!
//! A partition `λ = (n_1, ..., n_r)` names the abelian p-group
//! `Z/p^{n_1} x ... x Z/p^{n_r}`; it is *attainable* when its cyclicity index
//! `sum (3 - 2i) n_i` is nonnegative. This crate provides
//!
//! * [`partition`]: the partition type, cyclicity index, additions, and length bounds;
//! * [`enumerate`]: brute-force enumeration and the counts `a(n)`, `z0(n)`, `z(m)`;
//! * [`series`]: exact generating functions for those counts;
//! * [`bijection`]: zero-index partitions of `2m` <-> partitions of `m` into triangular numbers;
//! * [`group_invariants`]: automorphism orders, Cohen-Lenstra weights, predicted counts;
//! * [`class_group`]: class groups of imaginary quadratic fields via reduced forms.

pub mod bijection;
pub mod class_group;
pub mod enumerate;
pub mod error;
pub mod group_invariants;
pub mod partition;
pub mod series;

pub use bijection::{triangular_partitions, triangular_to_zero, zero_to_triangular, TriangularMultiset};
pub use class_group::{
    class_group_structure, class_number, is_fundamental_discriminant, reduced_forms, survey, ClassGroupStructure,
    QuadForm, SurveyReport,
};
pub use enumerate::{attainable_partitions, count_attainable, count_zero_cyclicity, partitions, z, CountsTable};
pub use error::{Error, Result};
pub use group_invariants::{
    aut_order, cohen_lenstra_weight, predicted_count, predicted_cumulative, PGroupShape, Prediction, PredictionKind,
    DEFAULT_CONSTANT,
};
pub use partition::{
    extremal_long_partition, max_attainable_length, min_cyclicity_partition, part_bound, CyclicityIndex, Partition,
};
pub use series::{attainable_series, triangular_series, zero_cyclicity_series, PowerSeries};
