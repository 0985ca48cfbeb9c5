use std::str::FromStr;

use crate::error::Error;
use crate::report::Report;

/// Whether constructions re-check the axioms of what they build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Paranoia {
    On,
    Off,
    /// Full checks up to the dimension ceiling, sampled checks above it.
    Auto,
}

impl FromStr for Paranoia {
    type Err = Error;
    fn from_str(s: &str) -> Result<Paranoia, Error> {
        match s {
            "on" => Ok(Paranoia::On),
            "off" => Ok(Paranoia::Off),
            "auto" => Ok(Paranoia::Auto),
            other => Err(Error::Input(format!("unknown paranoid mode {other:?}"))),
        }
    }
}

/// How many tuples an axiom check visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Full,
    /// A deterministic pseudo-random subset of roughly `per_mille / 1000` of the tuples.
    Sampled { seed: u64, per_mille: u32 },
}

impl CheckMode {
    pub fn sampled(seed: u64) -> CheckMode {
        CheckMode::Sampled { seed, per_mille: 100 }
    }

    pub fn selects(self, tuple: u64) -> bool {
        match self {
            CheckMode::Full => true,
            CheckMode::Sampled { seed, per_mille } => mix(seed ^ mix(tuple)) % 1000 < per_mille as u64,
        }
    }

    pub fn describe(self) -> String {
        match self {
            CheckMode::Full => "full".to_string(),
            CheckMode::Sampled { seed, per_mille } => format!("sampled({per_mille}/1000, seed {seed})"),
        }
    }
}

/// The splitmix64 finalizer, used as a stateless selection hash.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Settings shared by every construction.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub paranoia: Paranoia,
    pub sample_seed: u64,
    /// Largest number of matrix entries a single materialization may use.
    pub budget: usize,
    /// Dimension above which automatic checks switch to sampling.
    pub ceiling: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config { paranoia: Paranoia::Auto, sample_seed: 0x5eed, budget: 50_000_000, ceiling: 200 }
    }
}

impl Config {
    /// A configuration that skips all self-checks.
    pub fn trusting() -> Config {
        Config { paranoia: Paranoia::Off, ..Config::default() }
    }

    /// The check mode for an object of the given dimension, or `None` to skip.
    pub fn mode_for(&self, dim: usize) -> Option<CheckMode> {
        match self.paranoia {
            Paranoia::Off => None,
            Paranoia::On => Some(CheckMode::Full),
            Paranoia::Auto if dim <= self.ceiling => Some(CheckMode::Full),
            Paranoia::Auto => Some(CheckMode::sampled(self.sample_seed)),
        }
    }

    /// The mode used when a check is requested explicitly.
    pub fn explicit_mode(&self, dim: usize) -> CheckMode {
        match self.paranoia {
            Paranoia::Auto if dim > self.ceiling => CheckMode::sampled(self.sample_seed),
            _ => CheckMode::Full,
        }
    }

    /// Runs `check` when paranoia asks for it and turns a failed report into an error.
    pub fn assert<F>(&self, dim: usize, check: F) -> Result<(), Error>
    where
        F: FnOnce(CheckMode) -> Report,
    {
        match self.mode_for(dim) {
            None => Ok(()),
            Some(mode) => check(mode).into_result(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_keeps_about_a_tenth() {
        let mode = CheckMode::sampled(7);
        let kept = (0..100_000u64).filter(|&t| mode.selects(t)).count();
        assert!((9_000..11_000).contains(&kept), "kept {kept}");
    }

    #[test]
    fn auto_mode_switches_at_the_ceiling() {
        let cfg = Config::default();
        assert_eq!(cfg.mode_for(200), Some(CheckMode::Full));
        assert!(matches!(cfg.mode_for(201), Some(CheckMode::Sampled { .. })));
        assert_eq!(Config::trusting().mode_for(3), None);
    }
}
