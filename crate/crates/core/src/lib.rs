//! Universal IIR graph filters.
//!
//! Designs Butterworth, Chebyshev I/II and elliptic rational responses `H(λ)`
//! on the graph-frequency axis `[0, 2]` (the spectrum of the normalized
//! Laplacian), maps low-pass, band-pass and band-stop specifications onto a
//! single decaying prototype, and applies the result to graph signals either
//! spectrally or as a rational function of the Laplacian.
//!
//! Naming follows the convention that small Laplacian eigenvalues are *high*
//! graph frequencies. The prototype response decays in `λ` and is therefore
//! called the high-pass prototype; a "low-pass" design keeps large
//! eigenvalues.

pub mod band;
pub mod design;
pub mod document;
mod error;
pub mod filter;
pub mod graph;
pub mod linalg;
mod poly;
pub mod prototype;
pub mod response;
pub mod special;

pub use band::{Band, BandMapping, BandSpec};
pub use design::{design, DesignSpec, FilterDesign};
pub use document::DesignDocument;
pub use error::{Error, Result};
pub use graph::{Graph, GraphSignal};
pub use linalg::{Matrix, SpectralDecomposition};
pub use prototype::{DesignTrace, Family, PoleZeroSet, PrototypeSpec, RippleParams};
pub use response::RationalResponse;
pub use special::Modulus;

pub use num_complex::Complex64;
