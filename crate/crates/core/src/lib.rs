//! Meander graphs of type-A seaweed algebras: Frobenius detection, principal
//! elements and spectra from path measures, winding moves, and an
//! exact-rational linear-algebra oracle.

pub mod meander;
pub mod oracle;
pub mod rational;
pub mod render;
pub mod spectrum;
pub mod typesym;
pub mod verify;
pub mod winding;

pub use meander::{build_meander, components, graph_index, is_frobenius, orient, DirectedMeander, Meander, Side};
pub use rational::Rational;
pub use spectrum::{principal_element, spectrum, Measures, PrincipalElement, SpectrumMultiset};
pub use typesym::{format_type, parse_type, Composition, SeaweedType, TypeError};
pub use winding::{wind_down_sequence, wind_up, MoveKind, WindingTrace};
pub use verify::{check_theorem, check_windup_equations, sweep, SweepSummary, TheoremReport};
