//! Case verdicts, sweeps and reports.

use std::io::Write;
use std::time::Instant;

use num_rational::BigRational;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{enumerate_isotropic, FixedPointIndex};
use crate::patch::{validate_triple, ConeIdeal};
use crate::poly::{
    buchberger, initial_ideal_gens, minimalize, monomials_outside, Field, FieldSpec, Fp, Monomial,
};
use crate::standard::{bounded_bitableaux, bounded_specials, enumerate_standard};

pub const SCHEMA: &str = "tancone/1";

/// Default number of sampled triples when `d` is too large to sweep.
pub const DEFAULT_SAMPLE: usize = 30;

/// Largest `d` swept exhaustively.
pub const EXHAUSTIVE_MAX_D: usize = 3;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseSpec {
    pub d: usize,
    pub alpha: FixedPointIndex,
    pub beta: FixedPointIndex,
    pub gamma: FixedPointIndex,
    pub field: FieldSpec,
    pub max_degree: usize,
}

impl CaseSpec {
    pub fn new(
        alpha: FixedPointIndex,
        beta: FixedPointIndex,
        gamma: FixedPointIndex,
        field: FieldSpec,
        max_degree: usize,
    ) -> Result<Self> {
        validate_triple(&alpha, &beta, &gamma)?;
        Ok(Self {
            d: beta.d(),
            alpha,
            beta,
            gamma,
            field,
            max_degree,
        })
    }

    pub fn validate(&self) -> Result<()> {
        validate_triple(&self.alpha, &self.beta, &self.gamma)?;
        if self.d != self.beta.d() {
            return Err(Error::DimensionMismatch {
                left: self.d,
                right: self.beta.d(),
            });
        }
        Ok(())
    }
}

/// The five sides of the counting argument in one degree `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeCounts {
    pub degree: usize,
    /// Degree-`m` monomials outside the initial ideal of the good set.
    pub outside_good: usize,
    /// Bounded special multisets of degree `2m`.
    pub special_multisets: usize,
    /// Bounded on-starred semistandard bitableaux with `2m` boxes.
    pub bitableaux: usize,
    /// Standard monomials on `Y` of degree `m`.
    pub standard_monomials: usize,
    /// Degree-`m` monomials outside the initial ideal of `I`.
    pub outside_init: usize,
}

impl DegreeCounts {
    pub fn values(&self) -> [usize; 5] {
        [
            self.outside_good,
            self.special_multisets,
            self.bitableaux,
            self.standard_monomials,
            self.outside_init,
        ]
    }

    pub fn agree(&self) -> bool {
        self.values().windows(2).all(|w| w[0] == w[1])
    }

    /// The chain of inequalities: outside_good <= specials = bitableaux <=
    /// standard = outside_init.
    pub fn chain_holds(&self) -> bool {
        self.outside_good <= self.special_multisets
            && self.special_multisets == self.bitableaux
            && self.bitableaux <= self.standard_monomials
            && self.standard_monomials == self.outside_init
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub case: CaseSpec,
    pub groebner_equal: bool,
    pub counts_agree: bool,
    pub counts: Vec<DegreeCounts>,
    pub initial_ideal: Vec<String>,
    pub good_initial: Vec<String>,
    pub form: String,
    pub runtime_ms: u64,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.groebner_equal && self.counts_agree
    }
}

/// Whether reports carry wall-clock timings. Without them, reports are
/// byte-identical across runs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Timings {
    #[default]
    Record,
    Omit,
}

fn verify_in<F: Field>(spec: &CaseSpec, ctx: F::Ctx, timings: Timings) -> Result<Verdict> {
    let start = Instant::now();
    spec.validate()?;
    let ideal = ConeIdeal::<F>::new(&spec.alpha, &spec.beta, &spec.gamma, ctx)?;
    let vars = ideal.variables();
    let gb = buchberger(&ideal.generator_polys());
    let init = initial_ideal_gens(&gb);
    let good_init = minimalize(
        &ideal
            .good_polys()
            .iter()
            .filter_map(|p| p.initial_monomial().ok().cloned())
            .collect::<Vec<_>>(),
    );
    let grid = ideal.patch().grid();
    let standard = enumerate_standard(&spec.alpha, &spec.beta, &spec.gamma, spec.max_degree);
    let counts: Vec<DegreeCounts> = (1..=spec.max_degree)
        .map(|m| DegreeCounts {
            degree: m,
            outside_good: monomials_outside(&good_init, vars.len(), m as u32).len(),
            special_multisets: bounded_specials(grid, &spec.alpha, &spec.gamma, m as u32).len(),
            bitableaux: bounded_bitableaux(&spec.alpha, &spec.beta, &spec.gamma, m as u32).len(),
            standard_monomials: standard[m].len(),
            outside_init: monomials_outside(&init, vars.len(), m as u32).len(),
        })
        .collect();
    let fmt = |ms: &[Monomial]| {
        ms.iter()
            .map(|m| vars.format_monomial(m))
            .collect::<Vec<_>>()
    };
    let runtime_ms = match timings {
        Timings::Record => start.elapsed().as_millis() as u64,
        Timings::Omit => 0,
    };
    Ok(Verdict {
        case: spec.clone(),
        groebner_equal: init == good_init,
        counts_agree: counts.iter().all(DegreeCounts::agree),
        counts,
        initial_ideal: fmt(&init),
        good_initial: fmt(&good_init),
        form: ideal.patch().convention().label(),
        runtime_ms,
    })
}

pub fn verify_case(spec: &CaseSpec, timings: Timings) -> Result<Verdict> {
    match spec.field {
        FieldSpec::Rational => verify_in::<BigRational>(spec, (), timings),
        FieldSpec::Prime(p) => verify_in::<Fp>(spec, p, timings),
    }
}

/// All triples `alpha <= beta <= gamma` in `I(d)`, lexicographic.
pub fn all_triples(d: usize) -> Vec<(FixedPointIndex, FixedPointIndex, FixedPointIndex)> {
    let iso = enumerate_isotropic(d);
    let mut out = Vec::new();
    for b in &iso {
        for a in iso.iter().filter(|a| a.bruhat_le(b)) {
            for g in iso.iter().filter(|g| b.bruhat_le(g)) {
                out.push((a.clone(), b.clone(), g.clone()));
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SweepOptions {
    pub d: usize,
    pub max_degree: usize,
    pub field: FieldSpec,
    pub seed: u64,
    /// Number of triples sampled when `d` exceeds [`EXHAUSTIVE_MAX_D`].
    pub sample: usize,
    pub timings: Timings,
}

impl SweepOptions {
    pub fn new(d: usize, max_degree: usize, field: FieldSpec) -> Self {
        Self {
            d,
            max_degree,
            field,
            seed: 0,
            sample: DEFAULT_SAMPLE,
            timings: Timings::Record,
        }
    }
}

/// Cases of a sweep, in report order.
pub fn sweep_cases(opts: &SweepOptions) -> Vec<CaseSpec> {
    let triples = all_triples(opts.d);
    let chosen: Vec<_> = if opts.d <= EXHAUSTIVE_MAX_D || opts.sample >= triples.len() {
        triples
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut idx = sample(&mut rng, triples.len(), opts.sample).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| triples[i].clone()).collect()
    };
    chosen
        .into_iter()
        .map(|(alpha, beta, gamma)| CaseSpec {
            d: opts.d,
            alpha,
            beta,
            gamma,
            field: opts.field,
            max_degree: opts.max_degree,
        })
        .collect()
}

/// Runs every case in parallel; results keep case order.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<Verdict>> {
    sweep_cases(opts)
        .par_iter()
        .map(|c| verify_case(c, opts.timings))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub groebner_equal: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            _ => Err(Error::Parse(format!(
                "unknown format '{s}', expected json or csv"
            ))),
        }
    }
}

#[derive(Serialize)]
struct CsvRow {
    d: usize,
    alpha: String,
    beta: String,
    gamma: String,
    field: String,
    groebner_equal: bool,
    max_degree: usize,
    runtime_ms: u64,
}

impl Report {
    pub fn new(verdicts: Vec<Verdict>) -> Self {
        let passed = verdicts.iter().filter(|v| v.passed()).count();
        let summary = Summary {
            cases: verdicts.len(),
            passed,
            failed: verdicts.len() - passed,
            groebner_equal: verdicts.iter().filter(|v| v.groebner_equal).count(),
        };
        Self {
            schema: SCHEMA.to_string(),
            verdicts,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Exit status: 0 when every verdict passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if r.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema '{}'", r.schema)));
        }
        Ok(r)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.verdicts.is_empty() {
            w.write_record([
                "d",
                "alpha",
                "beta",
                "gamma",
                "field",
                "groebner_equal",
                "max_degree",
                "runtime_ms",
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
        }
        for v in &self.verdicts {
            w.serialize(CsvRow {
                d: v.case.d,
                alpha: v.case.alpha.to_string(),
                beta: v.case.beta.to_string(),
                gamma: v.case.gamma.to_string(),
                field: v.case.field.to_string(),
                groebner_equal: v.groebner_equal,
                max_degree: v.case.max_degree,
                runtime_ms: v.runtime_ms,
            })
            .map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        out.write_all(self.render(format)?.as_bytes())
            .map_err(|e| Error::Io(e.to_string()))
    }
}
