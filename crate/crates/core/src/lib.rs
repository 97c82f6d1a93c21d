//! Deterministic near-field link simulator for a compact base station that
//! pairs a movable transmit antenna (MA) with a transmissive reconfigurable
//! intelligent surface (TRIS).
//!
//! The library models spherical-wave propagation between the MA, each surface
//! element, and a user terminal; quantizes per-element phase shifts to b-bit
//! codebooks; evaluates the resulting received SNR against its continuous
//! phase upper bound; and searches the MA movement region for the
//! SNR-maximizing position. A sweep harness reproduces the standard
//! experiment families (SNR vs. surface size, vs. MA distance, and average
//! relative SNR vs. quantization bits).
//!
//! All evaluation is deterministic: summations run in fixed element order and
//! candidate searches break ties by grid index, so serial and parallel runs
//! produce bit-identical results.

pub mod channel;
pub mod codebook;
pub mod config;
pub mod error;
pub mod geometry;
pub mod optimizer;
pub mod scene;
pub mod snr;
pub mod sweep;

pub use channel::{element_distances, channel_coefficient, LinkGains, LinkState};
pub use codebook::{circular_distance, PhaseCodebook, PhaseVector};
pub use config::SceneConfig;
pub use error::{Error, Result};
pub use geometry::{
    rayleigh_distance, MaRegion, Point3, RegionPlane, RfConstants, TrisGeometry, UserLocation,
};
pub use optimizer::{optimize_ma, optimized_vs_fixed_gain, OptimizationResult, SnrSample};
pub use scene::Scene;
pub use snr::{coherent_sum, snr_discrete, snr_upper_bound, RadioBudget, SnrReport};
pub use sweep::{
    average_relative_snr, run_bits_sweep, run_distance_sweep, run_size_sweep, run_sweep, MaMode,
    PhaseMode, SweepKind, SweepMode, SweepRecord, SweepSpec,
};
