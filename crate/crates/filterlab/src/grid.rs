//! Time discretization: a fine simulation grid together with the coarse map
//! `tau_n(s) = floor(n s) / n` used by the Picard-discretized weights.
//!
//! The fine grid has `M` steps of size `T / M` and serves as the common
//! refinement for every coarse step `1/n` under comparison, so constructing a
//! grid requires every coarse point `k/n` to be a fine point.

use crate::error::FilterLabError;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    /// Horizon `T > 0`.
    horizon: f64,
    /// Number of fine steps `M`; fine step is `T / M`.
    fine_steps: usize,
    /// Coarse (Picard) resolution: coarse step is `1 / n`.
    picard_n: usize,
    /// Number of coarse intervals on `[0, T]`, i.e. `n * T`.
    coarse_intervals: usize,
    /// Fine steps per coarse interval, `M / (n T)`.
    fine_per_coarse: usize,
}

impl TimeGrid {
    /// Builds a grid with horizon `T`, `M` fine steps and coarse step `1/n`.
    ///
    /// Requires `n * T` to be a positive integer and `M` to be divisible by
    /// it, so every coarse point lies exactly on the fine grid.
    pub fn new(horizon: f64, fine_steps: usize, picard_n: usize) -> Result<Self> {
        if !(horizon > 0.0) || !horizon.is_finite() {
            return Err(FilterLabError::config("grid.horizon", "must be positive"));
        }
        if fine_steps == 0 {
            return Err(FilterLabError::config("grid.fine_steps", "must be positive"));
        }
        if picard_n == 0 {
            return Err(FilterLabError::config("grid.picard_n", "must be positive"));
        }
        let coarse_exact = picard_n as f64 * horizon;
        let coarse_intervals = coarse_exact.round() as usize;
        if coarse_intervals == 0 || (coarse_exact - coarse_intervals as f64).abs() > 1e-9 {
            return Err(FilterLabError::config(
                "grid.picard_n",
                format!("n * T = {coarse_exact} is not a positive integer"),
            ));
        }
        if fine_steps % coarse_intervals != 0 {
            return Err(FilterLabError::config(
                "grid.fine_steps",
                format!("M = {fine_steps} is not divisible by n * T = {coarse_intervals}"),
            ));
        }
        Ok(TimeGrid {
            horizon,
            fine_steps,
            picard_n,
            coarse_intervals,
            fine_per_coarse: fine_steps / coarse_intervals,
        })
    }

    /// Sibling grid sharing `(T, M)` but carrying a different coarse step.
    pub fn with_picard(&self, picard_n: usize) -> Result<Self> {
        TimeGrid::new(self.horizon, self.fine_steps, picard_n)
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn fine_steps(&self) -> usize {
        self.fine_steps
    }

    pub fn picard_n(&self) -> usize {
        self.picard_n
    }

    /// Fine step size `T / M`.
    pub fn dt(&self) -> f64 {
        self.horizon / self.fine_steps as f64
    }

    /// Time of fine point `k`, `k = 0..=M`.
    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.horizon / self.fine_steps as f64
    }

    /// `tau_n(t) = floor(n t) / n` for an arbitrary time.
    pub fn tau(&self, t: f64) -> f64 {
        (self.picard_n as f64 * t).floor() / self.picard_n as f64
    }

    /// Coarse index `floor(n t_k)` of fine point `k` (integer arithmetic).
    pub fn coarse_index(&self, k: usize) -> usize {
        k / self.fine_per_coarse
    }

    /// Fine index of `tau_n(t_k)`: the last coarse point at or before `t_k`.
    pub fn coarse_start(&self, k: usize) -> usize {
        (k / self.fine_per_coarse) * self.fine_per_coarse
    }

    /// Number of fine steps inside one coarse interval.
    pub fn fine_per_coarse(&self) -> usize {
        self.fine_per_coarse
    }

    /// Number of coarse intervals `n * T` on the whole horizon.
    pub fn coarse_intervals(&self) -> usize {
        self.coarse_intervals
    }

    /// `n (t_k - tau_n(t_k))`: position inside the coarse interval, in `[0, 1)`.
    pub fn sawtooth(&self, k: usize) -> f64 {
        (k % self.fine_per_coarse) as f64 / self.fine_per_coarse as f64
    }

    /// Fine index of a checkpoint time, which must lie on the fine grid.
    pub fn fine_index_of(&self, t: f64) -> Result<usize> {
        let pos = t / self.dt();
        let k = pos.round() as isize;
        if k < 0 || k as usize > self.fine_steps || (pos - k as f64).abs() > 1e-9 {
            return Err(FilterLabError::TimeOffGrid(t));
        }
        Ok(k as usize)
    }

    /// True when `other` shares the same fine grid (horizon and step count).
    pub fn same_fine_grid(&self, other: &TimeGrid) -> bool {
        self.horizon == other.horizon && self.fine_steps == other.fine_steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn tau_floors_to_coarse_point() {
        let g = TimeGrid::new(1.0, 8, 4).unwrap();
        assert_abs_diff_eq!(g.tau(0.3), 0.25);
        assert_eq!((4.0 * 0.3f64).floor() as usize, 1); // coarse index 1
    }

    #[test]
    fn tau_fixes_coarse_points() {
        let g = TimeGrid::new(1.0, 8, 4).unwrap();
        assert_abs_diff_eq!(g.tau(0.25), 0.25);
        assert_abs_diff_eq!(g.tau(0.0), 0.0);
    }

    #[test]
    fn divisibility_violation_is_config_error() {
        let err = TimeGrid::new(1.0, 6, 4).unwrap_err();
        assert!(matches!(err, FilterLabError::Config { .. }));
    }

    #[test]
    fn fractional_coarse_count_rejected() {
        // n * T = 4 * 0.3 = 1.2 is not an integer.
        assert!(TimeGrid::new(0.3, 12, 4).is_err());
        // n * T = 4 * 0.5 = 2 is fine.
        assert!(TimeGrid::new(0.5, 8, 4).is_ok());
    }

    #[test]
    fn coarse_points_are_fine_points() {
        let g = TimeGrid::new(2.0, 64, 8).unwrap();
        for c in 0..=g.coarse_intervals() {
            let k = c * g.fine_per_coarse();
            assert_abs_diff_eq!(g.time(k), c as f64 / 8.0, epsilon = 1e-14);
            assert_eq!(g.coarse_start(k), k);
        }
    }

    #[test]
    fn tau_bracket_invariant_on_fine_points() {
        let g = TimeGrid::new(1.0, 48, 6).unwrap();
        for k in 0..g.fine_steps() {
            let s = g.time(k);
            let tau = g.time(g.coarse_start(k));
            assert!(tau <= s + 1e-15);
            assert!(s < tau + 1.0 / 6.0 + 1e-15);
            assert_abs_diff_eq!(g.tau(s + 1e-12), tau, epsilon = 1e-9);
        }
    }

    #[test]
    fn refining_fine_grid_preserves_tau_at_shared_points() {
        let coarse = TimeGrid::new(1.0, 32, 4).unwrap();
        let fine = TimeGrid::new(1.0, 64, 4).unwrap();
        for k in 0..=32 {
            let t = coarse.time(k);
            assert_eq!(coarse.time(coarse.coarse_start(k)), fine.time(fine.coarse_start(2 * k)));
            assert_abs_diff_eq!(coarse.tau(t), fine.tau(t));
        }
    }

    #[test]
    fn sawtooth_scans_unit_interval() {
        let g = TimeGrid::new(1.0, 8, 4).unwrap();
        let vals: Vec<f64> = (0..8).map(|k| g.sawtooth(k)).collect();
        assert_eq!(vals, vec![0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5]);
    }

    #[test]
    fn fine_index_lookup() {
        let g = TimeGrid::new(1.0, 8, 4).unwrap();
        assert_eq!(g.fine_index_of(0.375).unwrap(), 3);
        assert!(g.fine_index_of(0.3).is_err());
        assert!(g.fine_index_of(1.5).is_err());
    }
}
