//! Localization of a non-cooperative RF transmitter from received-signal-strength
//! measurements, built around the weighted centroid estimator.
//!
//! The crate is organized as a pipeline:
//!
//! * [`placement`] — sensor deployments (fixed/random grids, uniform disk),
//!   self-localization error, and the node-spacing normalization `D`.
//! * [`channel`] — log-distance path loss with i.i.d. or exponentially
//!   correlated log-normal shadowing, plus irregular-coverage (DOI) masks.
//! * [`estimators`] — the weighted centroid estimator (WCL), participation
//!   filters, and the centroid / strongest-node / lateration baselines.
//! * [`theory`] — analytical error-distribution machinery: axis sum statistics,
//!   ratio-of-correlated-Gaussians moments, the cross-axis correlation
//!   coefficient, and the 2-D error pdf.
//! * [`dwcl`] — hexagonal geographic clustering and the two-phase distributed
//!   WCL protocol with a message ledger.
//! * [`overhead`] — transmit-power and operation-count accounting for the
//!   centralized and distributed variants.
//! * [`harness`] — experiment configuration, figure presets, Monte Carlo
//!   orchestration, and CSV emission.

pub mod channel;
pub mod dwcl;
pub mod estimators;
pub mod geometry;
pub mod harness;
pub mod numeric;
pub mod overhead;
pub mod placement;
pub mod rng;
pub mod theory;

pub use channel::{ChannelParams, CoverageMask, RssRealization, ShadowingMode};
pub use estimators::{Estimate, PminPolicy, WclConfig};
pub use geometry::{Area, Point2};
pub use placement::{Deployment, PlacementKind};
pub use rng::SeedSpec;
