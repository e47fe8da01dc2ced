//! Mobility-management toolkit: a system-level handover simulator over a
//! configurable multi-cell deployment, plus trust-region Bayesian
//! optimization of the per-cell A3-offset/TTT parameters that drive it.
//!
//! The crate is organized along the data flow of one optimization run:
//!
//! * [`scenario`] — deployment description (cells, routes, radio constants)
//!   and deterministic UE trajectory sampling.
//! * [`channel`] — synthetic site-specific channel: log-distance path loss,
//!   sector antenna patterns, spatially correlated shadowing; RSRP/SINR math.
//! * [`mobility`] — the per-UE handover state machine (L1/L3 filtering,
//!   Event A3 + TTT, RLF via Q_out/Q_in/T310, ping-pong detection) and the
//!   weighted KPI objective.
//! * [`gp`] — exact Gaussian-process surrogate with a Matern-5/2 ARD kernel,
//!   marginal-likelihood fitting and joint posterior sampling.
//! * [`turbo`] — trust-region Bayesian optimization: candidate generation,
//!   Thompson-sampling batch selection, TR expand/shrink/restart schedule.
//! * [`transfer`] — warm-starting optimization runs from mixed source/target
//!   datasets and min-max normalized KPI reporting.

pub mod channel;
pub mod gp;
pub mod mobility;
pub mod qmc;
pub mod scenario;
pub mod seed;
pub mod transfer;
pub mod turbo;
