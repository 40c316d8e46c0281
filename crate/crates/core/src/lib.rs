//! Exact computation of the small quantum cohomology ring of the Cayley
//! Grassmannian: the Schubert multiplication table, its presentation by two
//! generators, the enumerative inputs that determine it, and the spectral
//! consequences of the quantum multiplication by the hyperplane class.

pub mod data;
pub mod exact;
pub mod intersection;
pub mod pipeline;
pub mod expected;
pub mod presentation;
pub mod report;
pub mod schubert;
pub mod spectral;
pub mod suite;
