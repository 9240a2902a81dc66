//! Search caps and cooperative cancellation for the exponential searches.
//!
//! Every exact search refuses inputs above its cap with [`Error::CapExceeded`]
//! instead of running unbounded. The caps can be raised for a whole process
//! through the `TRUNKIT_CAP_OVERRIDE` environment variable, either
//! `unlimited` or a comma separated list such as `hamilton=60,canonical=20`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const CAP_OVERRIDE_VAR: &str = "TRUNKIT_CAP_OVERRIDE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum order for the Hamilton cycle/path oracle.
    pub hamilton_order: usize,
    /// Maximum size for the exact chromatic index solver.
    pub chromatic_index_size: usize,
    /// Maximum order for canonical forms.
    pub canonical_order: usize,
    /// Maximum size for the spanning eulerian subgraph search.
    pub eulerian_size: usize,
    /// Maximum number of components considered when coarsening sources.
    pub coarsen_components: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            hamilton_order: 40,
            chromatic_index_size: 50,
            canonical_order: 16,
            eulerian_size: 24,
            coarsen_components: 12,
        }
    }
}

impl Caps {
    pub fn unlimited() -> Self {
        Caps {
            hamilton_order: usize::MAX,
            chromatic_index_size: usize::MAX,
            canonical_order: usize::MAX,
            eulerian_size: usize::MAX,
            coarsen_components: usize::MAX,
        }
    }

    /// Parses an override string. Unknown keys and malformed numbers are
    /// rejected so a typo cannot silently keep the default.
    pub fn parse_override(spec: &str) -> std::result::Result<Caps, String> {
        let spec = spec.trim();
        if spec.eq_ignore_ascii_case("unlimited") || spec.eq_ignore_ascii_case("none") {
            return Ok(Caps::unlimited());
        }
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("bad number in {item:?}"))?;
            match key.trim() {
                "hamilton" => caps.hamilton_order = value,
                "chromatic_index" => caps.chromatic_index_size = value,
                "canonical" => caps.canonical_order = value,
                "eulerian" => caps.eulerian_size = value,
                "coarsen" => caps.coarsen_components = value,
                other => return Err(format!("unknown cap {other:?}")),
            }
        }
        Ok(caps)
    }

    /// Process-wide caps, read once from the environment. A malformed
    /// override falls back to the defaults.
    pub fn current() -> Caps {
        static CAPS: OnceLock<Caps> = OnceLock::new();
        *CAPS.get_or_init(|| match std::env::var(CAP_OVERRIDE_VAR) {
            Ok(spec) => Caps::parse_override(&spec).unwrap_or_default(),
            Err(_) => Caps::default(),
        })
    }

    pub(crate) fn check(search: &'static str, cap: usize, actual: usize) -> Result<()> {
        if actual > cap {
            Err(Error::CapExceeded { search, cap, actual })
        } else {
            Ok(())
        }
    }
}

/// Cancellation flag and node counter shared with a running search.
///
/// Searches call [`SearchControl::tick`] once per search node; a caller on
/// another thread may poll [`SearchControl::nodes`] or request an abort with
/// [`SearchControl::cancel`].
#[derive(Debug, Default)]
pub struct SearchControl {
    cancelled: AtomicBool,
    nodes: AtomicU64,
    node_limit: Option<u64>,
}

impl SearchControl {
    pub fn new() -> Self {
        Self::default()
    }

    /// Abort with [`Error::Cancelled`] once `limit` nodes have been visited.
    pub fn with_node_limit(limit: u64) -> Self {
        SearchControl {
            node_limit: Some(limit),
            ..Self::default()
        }
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.cancelled.load(Ordering::Relaxed) {
            return Err(Error::Cancelled);
        }
        match self.node_limit {
            Some(limit) if n > limit => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_overrides() {
        assert_eq!(Caps::parse_override("unlimited").unwrap(), Caps::unlimited());
        let caps = Caps::parse_override("hamilton=60, canonical=20").unwrap();
        assert_eq!(caps.hamilton_order, 60);
        assert_eq!(caps.canonical_order, 20);
        assert_eq!(caps.eulerian_size, 24);
        assert!(Caps::parse_override("hamiltn=3").is_err());
        assert!(Caps::parse_override("hamilton=x").is_err());
    }

    #[test]
    fn control_limits_and_cancels() {
        let ctl = SearchControl::with_node_limit(2);
        assert!(ctl.tick().is_ok());
        assert!(ctl.tick().is_ok());
        assert_eq!(ctl.tick(), Err(Error::Cancelled));

        let ctl = SearchControl::new();
        ctl.cancel();
        assert_eq!(ctl.tick(), Err(Error::Cancelled));
    }
}
