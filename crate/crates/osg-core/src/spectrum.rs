//! Frequency-grid math shared by every other module: window slicing at
//! 6.25 GHz granularity, fractional signal occupancy, and dB-domain
//! power/PSD arithmetic.
//!
//! Frequencies are stored as GHz offsets from a single C-band anchor
//! (191.3 THz); absolute optical frequencies never enter the math.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// WSS slice granularity in GHz.
pub const SLICE_WIDTH_GHZ: f64 = 6.25;

/// "No measurable power" reading, used everywhere an OCM path is dark.
pub const POWER_FLOOR_DBM: f64 = -40.0;

/// Maximum per-slice VOA attenuation. A slice driven to this value is
/// considered fully suppressed and reads the floor, same as a block.
pub const VOA_MAX_DB: f64 = 35.0;

/// Comparison tolerance for dB arithmetic throughout the workspace.
pub const DB_EPS: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    #[error("window width {width} GHz is not a positive multiple of {SLICE_WIDTH_GHZ} GHz")]
    NonAlignedWidth { width: f64 },
    #[error("power sum over an empty list")]
    EmptyInput,
    #[error("non-positive width {width} GHz")]
    NonPositiveWidth { width: f64 },
}

/// A leased spectral band, expressed as a GHz offset from the grid anchor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralWindow {
    pub start_ghz: f64,
    pub width_ghz: f64,
}

impl SpectralWindow {
    pub fn new(start_ghz: f64, width_ghz: f64) -> Result<Self, SpectrumError> {
        if width_ghz <= 0.0 {
            return Err(SpectrumError::NonPositiveWidth { width: width_ghz });
        }
        Ok(Self { start_ghz, width_ghz })
    }

    pub fn end_ghz(&self) -> f64 {
        self.start_ghz + self.width_ghz
    }

    pub fn contains_band(&self, low: f64, high: f64) -> bool {
        low >= self.start_ghz - DB_EPS && high <= self.end_ghz() + DB_EPS
    }

    pub fn overlaps(&self, other: &SpectralWindow) -> bool {
        self.start_ghz < other.end_ghz() && other.start_ghz < self.end_ghz()
    }
}

/// One 6.25 GHz WSS slice of a window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WssChannelSpec {
    pub index: usize,
    pub low_ghz: f64,
    pub high_ghz: f64,
}

impl WssChannelSpec {
    pub fn width_ghz(&self) -> f64 {
        self.high_ghz - self.low_ghz
    }
}

/// Modulation class of a carried signal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SignalKind {
    Coherent { symbol_rate_gbaud: f64, modulation: String },
    Ook { bit_rate_gbps: f64 },
}

/// A carried optical signal: band plus launch power.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Signal {
    pub kind: SignalKind,
    pub center_ghz: f64,
    pub width_ghz: f64,
    pub launch_power_dbm: f64,
}

impl Signal {
    /// Rogue OOK defaults: 10 Gb/s in a 20 GHz band.
    pub fn ook(center_ghz: f64, launch_power_dbm: f64) -> Self {
        Self {
            kind: SignalKind::Ook { bit_rate_gbps: 10.0 },
            center_ghz,
            width_ghz: 20.0,
            launch_power_dbm,
        }
    }

    pub fn coherent(center_ghz: f64, width_ghz: f64, launch_power_dbm: f64) -> Self {
        Self {
            kind: SignalKind::Coherent { symbol_rate_gbaud: 60.0, modulation: "16QAM".into() },
            center_ghz,
            width_ghz,
            launch_power_dbm,
        }
    }

    pub fn is_ook(&self) -> bool {
        matches!(self.kind, SignalKind::Ook { .. })
    }

    pub fn low_ghz(&self) -> f64 {
        self.center_ghz - self.width_ghz / 2.0
    }

    pub fn high_ghz(&self) -> f64 {
        self.center_ghz + self.width_ghz / 2.0
    }
}

/// Per-user SLA: total-power band at the ADD port plus a PSD band per
/// configured WSS slice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlaLimits {
    pub min_power_dbm: f64,
    pub max_power_dbm: f64,
    pub min_psd_dbm_ghz: f64,
    pub max_psd_dbm_ghz: f64,
}

impl SlaLimits {
    pub fn validate(&self) -> Result<(), String> {
        if self.min_power_dbm >= self.max_power_dbm {
            return Err(format!(
                "power limits inverted: {} >= {}",
                self.min_power_dbm, self.max_power_dbm
            ));
        }
        if self.min_psd_dbm_ghz >= self.max_psd_dbm_ghz {
            return Err(format!(
                "PSD limits inverted: {} >= {}",
                self.min_psd_dbm_ghz, self.max_psd_dbm_ghz
            ));
        }
        Ok(())
    }
}

/// Number of 6.25 GHz slices in a window, or `NonAlignedWidth`.
pub fn slice_count(window: &SpectralWindow) -> Result<usize, SpectrumError> {
    let n = (window.width_ghz / SLICE_WIDTH_GHZ).round();
    if n < 1.0 || (n * SLICE_WIDTH_GHZ - window.width_ghz).abs() > 1e-9 {
        return Err(SpectrumError::NonAlignedWidth { width: window.width_ghz });
    }
    Ok(n as usize)
}

/// Partition a window into adjacent 6.25 GHz slices covering it exactly.
pub fn slice_window(window: &SpectralWindow) -> Result<Vec<WssChannelSpec>, SpectrumError> {
    let n = slice_count(window)?;
    Ok((0..n)
        .map(|i| WssChannelSpec {
            index: i,
            low_ghz: window.start_ghz + i as f64 * SLICE_WIDTH_GHZ,
            high_ghz: window.start_ghz + (i + 1) as f64 * SLICE_WIDTH_GHZ,
        })
        .collect())
}

/// Fractional overlap of a signal band with each slice of a window,
/// each entry in [0, 1]. Signals partly or fully outside the window
/// simply contribute zero to the slices they miss.
pub fn occupancy_mask(signal: &Signal, window: &SpectralWindow) -> Result<Vec<f64>, SpectrumError> {
    let n = slice_count(window)?;
    let mut mask = vec![0.0; n];
    let (sig_lo, sig_hi) = (signal.low_ghz(), signal.high_ghz());
    // Only slices in the touched index range can have nonzero overlap.
    let first = ((sig_lo - window.start_ghz) / SLICE_WIDTH_GHZ).floor() as i64 - 1;
    let last = ((sig_hi - window.start_ghz) / SLICE_WIDTH_GHZ).ceil() as i64 + 1;
    for i in first.max(0)..=last.min(n as i64 - 1) {
        let low = window.start_ghz + i as f64 * SLICE_WIDTH_GHZ;
        let high = window.start_ghz + (i + 1) as f64 * SLICE_WIDTH_GHZ;
        let overlap = (sig_hi.min(high) - sig_lo.max(low)).max(0.0);
        mask[i as usize] = overlap / SLICE_WIDTH_GHZ;
    }
    Ok(mask)
}

pub fn dbm_to_mw(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

pub fn mw_to_dbm(mw: f64) -> f64 {
    10.0 * mw.log10()
}

/// Total of several dBm levels: linear sum re-expressed in dBm.
pub fn sum_power_dbm(levels: &[f64]) -> Result<f64, SpectrumError> {
    if levels.is_empty() {
        return Err(SpectrumError::EmptyInput);
    }
    let linear: f64 = levels.iter().map(|&l| dbm_to_mw(l)).sum();
    Ok(mw_to_dbm(linear))
}

/// Power spectral density of `power_dbm` spread over `width_ghz`.
pub fn psd_dbm_per_ghz(power_dbm: f64, width_ghz: f64) -> Result<f64, SpectrumError> {
    if width_ghz <= 0.0 {
        return Err(SpectrumError::NonPositiveWidth { width: width_ghz });
    }
    Ok(power_dbm - 10.0 * width_ghz.log10())
}
