use std::fmt::Write as _;

use serde::Serialize;
use wbcode::algcode::order_bound;
use wbcode::frdecode::{DecoderSetup, Transcript};
use wbcode::gf::FieldConfig;
use wbcode::wbcore::{
    check_duality_condition, dualize as dual_basis, ghw_bound, min_distance_bound, mu_row, sigma_row, Code, DualityCondition,
    IndexSet, Side, Variant,
};
use wbcode::{Elem, Error};

use crate::config::{Job, TableSource};
use crate::{parse_range, CliError, Output};

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn ints(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.value()).collect()
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub side: Side,
    pub variant: Variant,
    pub table: TableSource,
    pub table_entries: usize,
    pub sigma: Vec<usize>,
    pub mu: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_mu: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub designed_d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ghw: Option<GhwEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GhwEntry {
    pub t: usize,
    pub bound: usize,
}

pub fn bounds(job: &Job) -> Result<Output, CliError> {
    let table = job.table()?;
    let mut report = BoundsReport {
        n: job.n(),
        side: job.side,
        variant: job.variant,
        table: job.source,
        table_entries: table.len(),
        sigma: sigma_row(&table, job.variant),
        mu: mu_row(&table, job.variant),
        order_sigma: job.semigroup.as_ref().map(|s| s.sigma_row()),
        order_mu: job.semigroup.as_ref().map(|s| s.mu_row()),
        index_set: None,
        dimension: None,
        designed_d: None,
        order_bound: None,
        ghw: None,
    };
    if let Some(indices) = &job.indices {
        let code = Code::new(job.g.clone(), indices.clone(), job.side)?;
        report.index_set = Some(indices.members().to_vec());
        report.dimension = Some(code.dimension());
        report.designed_d = Some(min_distance_bound(&code, &table, job.variant)?);
        if let Some(s) = &job.semigroup {
            report.order_bound = Some(order_bound(s, indices, job.side)?);
        }
        if let Some(t) = job.t {
            report.ghw = Some(GhwEntry { t, bound: ghw_bound(&code, &table, job.variant, t)? });
        }
    }

    let mut text = String::new();
    let _ = writeln!(text, "n = {}, side {:?}, variant {:?}, {:?} table with {} entries", report.n, report.side, report.variant, report.table, report.table_entries);
    let _ = writeln!(text, "{:>4} {:>6} {:>6}{}", "i", "sigma", "mu", if report.order_sigma.is_some() { "  order_sigma  order_mu" } else { "" });
    for i in 0..report.n {
        let _ = write!(text, "{:>4} {:>6} {:>6}", i + 1, report.sigma[i], report.mu[i]);
        if let (Some(os), Some(om)) = (&report.order_sigma, &report.order_mu) {
            let _ = write!(text, "  {:>11}  {:>8}", os[i], om[i]);
        }
        text.push('\n');
    }
    if let (Some(idx), Some(d)) = (&report.index_set, report.designed_d) {
        let _ = writeln!(text, "I = {{{}}}, dimension {}", join(idx), report.dimension.unwrap_or(0));
        let _ = writeln!(text, "designed distance: {d}");
    }
    if let Some(b) = report.order_bound {
        let _ = writeln!(text, "order bound: {b}");
    }
    if let Some(g) = report.ghw {
        let _ = writeln!(text, "d_{} >= {}", g.t, g.bound);
    }
    Ok(Output::new(&report, text))
}

/// A basis in the raw-basis config format, so it can be read back.
#[derive(Serialize)]
pub struct BasisDump {
    pub field: FieldConfig,
    pub basis: Vec<Vec<u32>>,
}

pub fn dualize(job: &Job) -> Result<Output, CliError> {
    let h = dual_basis(&job.g);
    let condition = check_duality_condition(&job.g, &h)?;
    if condition != DualityCondition::Full {
        return Err(CliError::Config(format!("dual basis check failed: {condition:?}")));
    }
    let dump = BasisDump { field: job.field.config(), basis: h.to_ints() };
    let text = dump.basis.iter().map(|row| join(row)).collect::<Vec<_>>().join("\n") + "\n";
    Ok(Output::new(&dump, text))
}

fn primary_code(job: &Job) -> Result<Code, CliError> {
    if job.side != Side::Primary {
        return Err(Error::SideMismatch.into());
    }
    Ok(Code::new(job.g.clone(), job.indices()?.clone(), Side::Primary)?)
}

pub fn encode(job: &Job, message: &str) -> Result<Output, CliError> {
    let code = primary_code(job)?;
    let m = job.parse_vector(message)?;
    let c = code.encode(&m)?;
    #[derive(Serialize)]
    struct Encoded {
        message: Vec<u32>,
        codeword: Vec<u32>,
    }
    let out = Encoded { message: ints(&m), codeword: ints(&c) };
    let text = format!("{}\n", join(&out.codeword));
    Ok(Output::new(&out, text))
}

pub fn decoder_setup(job: &Job) -> Result<DecoderSetup, CliError> {
    let code = primary_code(job)?;
    let table = job.decoder_table();
    Ok(DecoderSetup::new(job.g.clone(), job.u.clone(), code.indices().clone(), table.as_ref())?)
}

#[derive(Serialize)]
pub struct DecodeReport {
    pub status: &'static str,
    pub error: Vec<u32>,
    pub error_weight: usize,
    pub codeword: Vec<u32>,
    pub syndromes: Vec<u32>,
    pub transcript: Transcript,
}

pub fn decode(job: &Job, received: &str) -> Result<Output, CliError> {
    let setup = decoder_setup(job)?;
    let r = job.parse_vector(received)?;
    let mut state = setup.init_syndromes(&r)?;
    loop {
        match state.step() {
            Ok(Some(_)) => {}
            Ok(None) => break,
            Err(Error::Decode(failure)) => {
                return Err(CliError::Decode { failure, transcript: state.transcript().clone() });
            }
            Err(e) => return Err(e.into()),
        }
    }
    let decoded = state.finish()?;
    let report = DecodeReport {
        status: "ok",
        error: ints(&decoded.error),
        error_weight: decoded.error.iter().filter(|x| !x.is_zero()).count(),
        codeword: ints(&decoded.codeword),
        syndromes: ints(&decoded.syndromes),
        transcript: decoded.transcript,
    };
    let mut text = String::new();
    let _ = writeln!(text, "status: ok");
    let _ = writeln!(text, "error:    {} (weight {})", join(&report.error), report.error_weight);
    let _ = writeln!(text, "codeword: {}", join(&report.codeword));
    for round in &report.transcript.rounds {
        let tally: Vec<String> = round.tally.iter().map(|(v, c)| format!("{}:{c}", v.value())).collect();
        let _ = writeln!(text, "s_{}: {} candidates, votes {}", round.l, round.candidates.len(), tally.join(" "));
    }
    Ok(Output::new(&report, text))
}

pub fn simulate(job: &Job, weight: &str, trials: usize, seed: u64) -> Result<Output, CliError> {
    let setup = decoder_setup(job)?;
    let weights: Vec<usize> = parse_range(weight)?.collect();
    if let Some(&t) = weights.iter().find(|&&t| t > job.n()) {
        return Err(CliError::Config(format!("weight {t} exceeds length {}", job.n())));
    }
    if trials == 0 {
        return Err(CliError::Config("trials must be at least 1".into()));
    }
    let report = crate::sim::simulate(&setup, &weights, trials, seed)?;
    let mut text = String::new();
    let _ = writeln!(text, "n = {}, k = {}, designed distance {}, radius {}", report.n, report.dimension, report.designed_distance, report.radius.map_or("none".into(), |r| r.to_string()));
    let _ = writeln!(text, "{} trials, seed {} ({}), {:.1} ms", report.trials, report.seed, report.generator, report.wall_time_ms);
    let _ = writeln!(text, "{:>6} {:>8} {:>9} {:>10} {:>13} {:>14}", "weight", "trials", "success", "tied_vote", "no_candidates", "wrong_codeword");
    for w in &report.by_weight {
        let _ = writeln!(text, "{:>6} {:>8} {:>9} {:>10} {:>13} {:>14}", w.weight, w.trials, w.successes, w.failures.tied_vote, w.failures.no_candidates, w.failures.wrong_codeword);
    }
    let _ = writeln!(text, "successes {}, failures {}", report.successes, report.failures.total());
    Ok(Output::new(&report, text))
}

pub fn ghw(job: &Job, t: Option<&str>) -> Result<Output, CliError> {
    let indices: &IndexSet = job.indices()?;
    let code = Code::new(job.g.clone(), indices.clone(), job.side)?;
    let table = job.table()?;
    let range = match (t, job.t) {
        (Some(text), _) => parse_range(text)?,
        (None, Some(t)) => t..=t,
        (None, None) => 1..=code.dimension(),
    };
    let rows = range
        .map(|t| Ok(GhwEntry { t, bound: ghw_bound(&code, &table, job.variant, t)? }))
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut text = format!("{:>4} {:>6}\n", "t", "bound");
    for r in &rows {
        let _ = writeln!(text, "{:>4} {:>6}", r.t, r.bound);
    }
    Ok(Output::new(&rows, text))
}
