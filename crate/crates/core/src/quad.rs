//! Globally adaptive Gauss–Kronrod (7/15) quadrature on a partitioned interval.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and refinement budget for every numerical integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Number of panel bisections allowed on top of the initial partition.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_subdivisions: 60,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::invalid(format!(
                "rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::invalid(format!(
                "abs_tol must be >= 0, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::invalid("max_subdivisions must be >= 1"));
        }
        Ok(())
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    pub fn with_max_subdivisions(self, max_subdivisions: usize) -> Self {
        Self {
            max_subdivisions,
            ..self
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    l1: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut l1 = fc.abs() * WGK[7];
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += w * (f1 + f2);
        l1 += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
        l1: l1 * half.abs(),
    }
}

/// Integrate `f` over the partition given by `breaks` (strictly increasing,
/// at least two points).
///
/// Converges when the summed error estimate is below
/// `max(rel_tol·|I|, abs_tol)` or below the round-off floor `64·ε·∫|f|`,
/// the latter being the best a double-precision sum can do when `f`
/// oscillates and cancels.
pub fn integrate_partition<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    q: &QuadratureSpec,
) -> Result<f64> {
    if breaks.len() < 2 {
        return Err(Error::invalid(
            "quadrature partition needs at least two points",
        ));
    }
    let mut heap = BinaryHeap::with_capacity(breaks.len() + q.max_subdivisions);
    let (mut total, mut err, mut l1) = (0.0, 0.0, 0.0);
    for w in breaks.windows(2) {
        let p = gk15(&f, w[0], w[1]);
        total += p.value;
        err += p.error;
        l1 += p.l1;
        heap.push(p);
    }
    let converged = |total: f64, err: f64, l1: f64| {
        err <= (q.rel_tol * total.abs()).max(q.abs_tol) || err <= 64.0 * f64::EPSILON * l1
    };
    let mut previous = f64::NAN;
    for _ in 0..q.max_subdivisions {
        if converged(total, err, l1) {
            return Ok(total);
        }
        let worst = heap.pop().expect("partition is nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = gk15(&f, worst.a, mid);
        let right = gk15(&f, mid, worst.b);
        previous = total;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }
    if converged(total, err, l1) {
        return Ok(total);
    }
    // Re-sum to shed the drift of the running totals before giving up.
    let total_fresh: f64 = heap.iter().map(|p| p.value).sum();
    let err_fresh: f64 = heap.iter().map(|p| p.error).sum();
    let l1_fresh: f64 = heap.iter().map(|p| p.l1).sum();
    if converged(total_fresh, err_fresh, l1_fresh) {
        return Ok(total_fresh);
    }
    Err(Error::Convergence {
        what: "adaptive quadrature",
        previous,
        last: total_fresh,
    })
}

/// Integrate `f` over `[a, b]` split into `panels` equal pieces.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    q: &QuadratureSpec,
) -> Result<f64> {
    let breaks = uniform_breaks(a, b, panels.max(1));
    integrate_partition(f, &breaks, q)
}

pub(crate) fn uniform_breaks(a: f64, b: f64, panels: usize) -> Vec<f64> {
    let h = (b - a) / panels as f64;
    let mut v: Vec<f64> = (0..panels).map(|i| a + h * i as f64).collect();
    v.push(b);
    v
}
