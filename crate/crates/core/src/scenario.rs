//! Deployment scenarios: cells, UE routes and radio constants, loaded from a
//! TOML file (schema in `docs/scenario.md`), plus deterministic trajectory
//! sampling along route polylines.
//!
//! All lengths are meters, powers dBm, frequencies Hz. The simulation tick is
//! fixed at 40 ms to match the L1 measurement grid; see [`TICK_S`].

use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

use crate::channel::ChannelParams;

/// Simulation tick (s). Timers are integer multiples of this.
pub const TICK_S: f64 = 0.04;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("failed to read scenario file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse scenario file: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("unknown route id {0}")]
    UnknownRoute(usize),
    #[error("speed and tick must be positive (got speed={speed} m/s, tick={tick} s)")]
    BadSampling { speed: f64, tick: f64 },
}

/// One sector antenna of a site.
#[derive(Debug, Clone, Deserialize)]
pub struct Cell {
    pub id: usize,
    /// Site ground reference [x, y, z] (m). The radiating element sits at
    /// `z + antenna_height_m`.
    pub position: [f64; 3],
    pub antenna_height_m: f64,
    /// Boresight azimuth, degrees counterclockwise from +x.
    pub azimuth_deg: f64,
    /// Total transmit power across the whole bandwidth.
    #[serde(default = "default_tx_power_dbm")]
    pub tx_power_dbm: f64,
}

fn default_tx_power_dbm() -> f64 {
    46.0
}

impl Cell {
    /// Antenna phase-center position.
    pub fn antenna_pos(&self) -> [f64; 3] {
        let [x, y, z] = self.position;
        [x, y, z + self.antenna_height_m]
    }
}

/// A street abstracted as a 2D polyline; UEs traverse it at constant speed.
#[derive(Debug, Clone, Deserialize)]
pub struct Route {
    pub id: usize,
    pub waypoints: Vec<[f64; 2]>,
    #[serde(default = "default_ue_height_m")]
    pub ue_height_m: f64,
}

fn default_ue_height_m() -> f64 {
    1.5
}

impl Route {
    pub fn length_m(&self) -> f64 {
        self.waypoints
            .windows(2)
            .map(|w| {
                let dx = w[1][0] - w[0][0];
                let dy = w[1][1] - w[0][1];
                (dx * dx + dy * dy).sqrt()
            })
            .sum()
    }
}

/// The simulated world: immutable after load, safe to share across threads.
#[derive(Debug, Clone, Deserialize)]
pub struct DeploymentScenario {
    #[serde(default = "default_carrier_hz")]
    pub carrier_hz: f64,
    #[serde(default = "default_bandwidth_hz")]
    pub bandwidth_hz: f64,
    #[serde(default = "default_n_prb")]
    pub n_prb: usize,
    #[serde(default = "default_prb_bw_hz")]
    pub prb_bw_hz: f64,
    #[serde(default = "default_noise_psd")]
    pub noise_psd_dbm_hz: f64,
    #[serde(rename = "channel")]
    pub channel_params: ChannelParams,
    pub cells: Vec<Cell>,
    pub routes: Vec<Route>,
}

fn default_carrier_hz() -> f64 {
    2.0e9
}
fn default_bandwidth_hz() -> f64 {
    10.0e6
}
fn default_n_prb() -> usize {
    50
}
fn default_prb_bw_hz() -> f64 {
    180.0e3
}
fn default_noise_psd() -> f64 {
    -174.0
}

impl DeploymentScenario {
    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn route(&self, route_id: usize) -> Result<&Route, ScenarioError> {
        self.routes
            .iter()
            .find(|r| r.id == route_id)
            .ok_or(ScenarioError::UnknownRoute(route_id))
    }

    /// Resource elements carrying reference signals per symbol grid used for
    /// RSRP normalization: 12 subcarriers per PRB.
    pub fn n_re(&self) -> usize {
        self.n_prb * 12
    }

    pub fn tx_powers_dbm(&self) -> Vec<f64> {
        self.cells.iter().map(|c| c.tx_power_dbm).collect()
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        let inv = |msg: String| Err(ScenarioError::Invalid(msg));
        if self.cells.len() < 2 {
            return inv(format!("at least 2 cells required, found {}", self.cells.len()));
        }
        let mut ids: Vec<usize> = self.cells.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != self.cells.len() {
            return inv("duplicate cell id".into());
        }
        if self.n_prb as f64 * self.prb_bw_hz > self.bandwidth_hz + 1e-6 {
            return inv(format!(
                "n_prb * prb_bw_hz = {} exceeds bandwidth_hz = {}",
                self.n_prb as f64 * self.prb_bw_hz,
                self.bandwidth_hz
            ));
        }
        for c in &self.cells {
            if c.antenna_height_m <= 0.0 {
                return inv(format!("cell {}: antenna_height_m must be > 0", c.id));
            }
            if !c.tx_power_dbm.is_finite() {
                return inv(format!("cell {}: tx_power_dbm must be finite", c.id));
            }
        }
        let mut route_ids: Vec<usize> = self.routes.iter().map(|r| r.id).collect();
        route_ids.sort_unstable();
        route_ids.dedup();
        if route_ids.len() != self.routes.len() {
            return inv("duplicate route id".into());
        }
        for r in &self.routes {
            if r.waypoints.len() < 2 {
                return inv(format!("route {}: needs at least 2 waypoints", r.id));
            }
            for w in r.waypoints.windows(2) {
                if w[0] == w[1] {
                    return inv(format!("route {}: consecutive waypoints must be distinct", r.id));
                }
            }
        }
        self.channel_params
            .validate()
            .map_err(|e| ScenarioError::Invalid(e))?;
        Ok(())
    }
}

/// Parses and validates a scenario file. Pure in the file bytes: identical
/// bytes yield an identical scenario.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<DeploymentScenario, ScenarioError> {
    let text = std::fs::read_to_string(path)?;
    load_scenario_str(&text)
}

pub fn load_scenario_str(text: &str) -> Result<DeploymentScenario, ScenarioError> {
    let scenario: DeploymentScenario = toml::from_str(text)?;
    scenario.validate()?;
    Ok(scenario)
}

/// Time-sampled positions of one UE driving a route at constant speed.
#[derive(Debug, Clone)]
pub struct UeTrajectory {
    pub route_id: usize,
    pub speed_mps: f64,
    pub tick_s: f64,
    /// [x, y, z] per tick; z is the UE height.
    pub positions: Vec<[f64; 3]>,
}

impl UeTrajectory {
    pub fn n_ticks(&self) -> usize {
        self.positions.len()
    }
}

/// Walks the route polyline start-to-end at constant speed, emitting one
/// position per tick. Deterministic; the final sample is the route endpoint
/// even when the remaining arc is shorter than one step.
pub fn sample_trajectory(
    scenario: &DeploymentScenario,
    route_id: usize,
    speed_mps: f64,
    tick_s: f64,
) -> Result<UeTrajectory, ScenarioError> {
    if speed_mps <= 0.0 || tick_s <= 0.0 {
        return Err(ScenarioError::BadSampling { speed: speed_mps, tick: tick_s });
    }
    let route = scenario.route(route_id)?;
    let z = route.ue_height_m;
    let step = speed_mps * tick_s;
    let total = route.length_m();

    // Cumulative arc length per waypoint.
    let mut cum = Vec::with_capacity(route.waypoints.len());
    let mut acc = 0.0;
    cum.push(0.0);
    for w in route.waypoints.windows(2) {
        let dx = w[1][0] - w[0][0];
        let dy = w[1][1] - w[0][1];
        acc += (dx * dx + dy * dy).sqrt();
        cum.push(acc);
    }

    let n_steps = (total / step + 1e-12).floor() as usize;
    let mut positions = Vec::with_capacity(n_steps + 2);
    let mut seg = 0;
    for k in 0..=n_steps {
        let s = k as f64 * step;
        positions.push(point_at(route, &cum, &mut seg, s, z));
    }
    // Final partial step to the endpoint.
    if total - n_steps as f64 * step > 1e-9 {
        let last = *route.waypoints.last().unwrap();
        positions.push([last[0], last[1], z]);
    }

    Ok(UeTrajectory { route_id, speed_mps, tick_s, positions })
}

fn point_at(route: &Route, cum: &[f64], seg: &mut usize, s: f64, z: f64) -> [f64; 3] {
    while *seg + 2 < cum.len() && cum[*seg + 1] < s {
        *seg += 1;
    }
    let (a, b) = (route.waypoints[*seg], route.waypoints[*seg + 1]);
    let seg_len = cum[*seg + 1] - cum[*seg];
    let t = ((s - cum[*seg]) / seg_len).clamp(0.0, 1.0);
    [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), z]
}
