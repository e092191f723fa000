//! Spectral and edge-count sufficient conditions for Hamiltonian cycles, the
//! extremal graph families that make them sharp, and an exact search oracle to
//! check both.

pub mod certifier;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod spectral;

pub use certifier::{certify, certify_bipartite, Certificate, Rule, Verdict};
pub use error::{Error, Graph6Error, Result};
pub use family::{make_family, Family, FamilyGraph, FamilyParams, LabelledFamily, Perturbation};
pub use graph::{BipartiteGraph, Graph, Side};
pub use graph6::{decode_graph6, encode_graph6, encode_graph6_string};
pub use hamiltonicity::{is_hamiltonian, is_hamiltonian_bipartite, HamOutcome, HamWitness};
pub use spectral::{spectral_radius, SpectralResult};
