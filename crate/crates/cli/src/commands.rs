use std::io::Read;
use std::path::Path;

use num_bigint::BigUint;
use strahler::counting::{
    admissible_sequences, count_trees, rng_from_seed, BigCount, HortonSequence, SequenceSampler,
    TreeRank, UniformSampler,
};
use strahler::entropy::{convergence_row, entropy_asymptotic_residual, entropy_rate, entropy_tn};
use strahler::table::{group_thousands, table1, tail_label, TABLE1_TAILS};
use strahler::verify::{verify_leaves_with, VerifyRow};
use strahler::{codec, ErrorKind, PlaneTree, TkrParams};
use thiserror::Error;

use crate::{Command, GlobalOpts};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] strahler::Error),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    /// A check ran to completion and reported failures; the report is printed.
    #[error("verification failed")]
    Failed(Vec<u8>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.kind() == ErrorKind::Format => 2,
            CliError::Format(_) | CliError::Io(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: &Command, opts: &GlobalOpts) -> Result<Vec<u8>> {
    match command {
        Command::Count { sequence } => count(sequence, opts),
        Command::Table1 => table(opts),
        Command::Verify {
            n_max,
            inject_fault,
        } => verify(*n_max, *inject_fault),
        Command::Curve { r_min, r_max, step } => curve(*r_min, *r_max, *step),
        Command::Tkr {
            order,
            exponent,
            alpha,
            sweep,
            count,
        } => tkr(*order, *exponent, *alpha, *sweep, *count, opts),
        Command::Sequences { leaves } => sequences(*leaves, opts),
        Command::Sample {
            sequence,
            leaves,
            count,
        } => sample(sequence.as_deref(), *leaves, *count, opts),
        Command::Rank { trees } => rank(trees),
        Command::Unrank { rank } => unrank(rank),
        Command::Encode { input } => encode(input),
        Command::Decode { input } => decode(input),
        Command::Entropy { vertices } => entropy(*vertices),
    }
}

fn number(n: &BigCount, opts: &GlobalOpts) -> String {
    let s = n.to_string();
    if opts.pretty {
        group_thousands(&s)
    } else {
        s
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<Vec<u8>> {
    w.into_inner()
        .map_err(|e| CliError::Io(e.into_error()))
}

fn fixed(x: f64) -> String {
    format!("{x:.12}")
}

fn count(sequence: &str, opts: &GlobalOpts) -> Result<Vec<u8>> {
    let seq: HortonSequence = sequence.parse()?;
    Ok(format!("{}\n", number(&count_trees(&seq), opts)).into_bytes())
}

fn table(opts: &GlobalOpts) -> Result<Vec<u8>> {
    let mut w = csv_writer();
    let mut header = vec!["N1".to_string()];
    header.extend(TABLE1_TAILS.iter().map(|t| tail_label(t)));
    w.write_record(&header).map_err(csv_err)?;
    for row in table1() {
        let mut rec = vec![row.leaves.to_string()];
        rec.extend(
            row.cells
                .iter()
                .map(|c| c.as_ref().map(|n| number(n, opts)).unwrap_or_default()),
        );
        w.write_record(&rec).map_err(csv_err)?;
    }
    finish(w)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn verify(n_max: u64, inject_fault: bool) -> Result<Vec<u8>> {
    if n_max == 0 {
        return Err(CliError::Domain("n-max must be at least 1".into()));
    }
    let counter = |s: &HortonSequence| {
        let c = count_trees(s);
        if inject_fault {
            c + 1u32
        } else {
            c
        }
    };
    let rows: Vec<VerifyRow> = (1..=n_max).map(|n| verify_leaves_with(n, counter)).collect();
    let mut w = csv_writer();
    w.write_record(["n", "sequences", "catalan", "sequence_sum", "oracle", "status"])
        .map_err(csv_err)?;
    for r in &rows {
        let oracle = match r.oracle_ok {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        w.write_record([
            r.leaves.to_string(),
            r.sequences.to_string(),
            r.catalan.to_string(),
            r.sequence_sum.to_string(),
            oracle.to_string(),
            if r.passed() { "PASS" } else { "FAIL" }.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let out = finish(w)?;
    if rows.iter().all(VerifyRow::passed) {
        Ok(out)
    } else {
        Err(CliError::Failed(out))
    }
}

fn curve(r_min: f64, r_max: f64, step: f64) -> Result<Vec<u8>> {
    if r_min.is_nan() || r_min < 2.0 {
        return Err(CliError::Domain(format!("r-min must be at least 2, got {r_min}")));
    }
    if !(r_max > r_min && r_max.is_finite()) {
        return Err(CliError::Domain("need r-min < r-max".into()));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(CliError::Domain("step must be positive".into()));
    }
    let points = ((r_max - r_min) / step + 1e-9).floor() as u64;
    let mut w = csv_writer();
    w.write_record(["R", "entropy_rate"]).map_err(csv_err)?;
    for i in 0..=points {
        let r = r_min + step * i as f64;
        let h = entropy_rate(r)?.value;
        w.write_record([fixed(r), fixed(h)]).map_err(csv_err)?;
    }
    finish(w)
}

fn tkr(order: u32, r: f64, alpha: f64, sweep: bool, only_count: bool, opts: &GlobalOpts) -> Result<Vec<u8>> {
    let p = TkrParams::new(order, r, alpha)?;
    if only_count {
        return Ok(format!("{}\n", number(&strahler::entropy::tkr_count(&p), opts)).into_bytes());
    }
    let orders = if sweep { 1..=order } else { order..=order };
    let mut w = csv_writer();
    w.write_record([
        "K",
        "R",
        "alpha",
        "sequences",
        "log2_count",
        "normalized",
        "closed_form",
        "abs_error",
    ])
    .map_err(csv_err)?;
    let mut rows = Vec::new();
    for k in orders {
        rows.push(convergence_row(&TkrParams::new(k, r, alpha)?));
    }
    for row in rows {
        w.write_record([
            row.order.to_string(),
            fixed(row.exponent),
            fixed(row.alpha),
            row.sequences.to_string(),
            fixed(row.log2_count),
            fixed(row.normalized),
            fixed(row.closed_form),
            fixed(row.abs_error),
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

fn sequences(leaves: u64, opts: &GlobalOpts) -> Result<Vec<u8>> {
    if leaves == 0 {
        return Err(CliError::Domain("leaf count must be at least 1".into()));
    }
    let mut w = csv_writer();
    w.write_record(["sequence", "count"]).map_err(csv_err)?;
    for s in admissible_sequences(leaves) {
        w.write_record([s.to_string(), number(&count_trees(&s), opts)])
            .map_err(csv_err)?;
    }
    finish(w)
}

fn sample(sequence: Option<&str>, leaves: Option<u64>, count: u64, opts: &GlobalOpts) -> Result<Vec<u8>> {
    let mut rng = rng_from_seed(opts.seed);
    let mut out = String::new();
    let mut push = |t: PlaneTree| {
        out.push_str(&t.to_string());
        out.push('\n');
    };
    match (sequence, leaves) {
        (Some(s), _) => {
            let sampler = SequenceSampler::new(s.parse()?);
            (0..count).for_each(|_| push(sampler.sample(&mut rng)));
        }
        (None, Some(n)) => {
            let sampler = UniformSampler::new(n)?;
            (0..count).for_each(|_| push(sampler.sample(&mut rng)));
        }
        (None, None) => return Err(CliError::Format("give a sequence or --leaves".into())),
    }
    Ok(out.into_bytes())
}

fn rank(trees: &[String]) -> Result<Vec<u8>> {
    let mut out = String::new();
    for t in trees {
        let tree: PlaneTree = t.trim().parse()?;
        out.push_str(&tree.rank().to_string());
        out.push('\n');
    }
    Ok(out.into_bytes())
}

fn unrank(arg: &str) -> Result<Vec<u8>> {
    let Some((seq, range)) = arg.split_once('@') else {
        return Err(CliError::Format(format!("expected \"N1,...,NK@index\", got {arg:?}")));
    };
    let Some((first, last)) = range.split_once("..") else {
        let r: TreeRank = arg.parse()?;
        return Ok(format!("{}\n", strahler::unrank(&r)?).into_bytes());
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<BigUint>()
            .map_err(|_| CliError::Format(format!("bad index {s:?}")))
    };
    let (first, last) = (parse(first)?, parse(last)?);
    if first > last {
        return Err(CliError::Domain(format!("empty range {first}..{last}")));
    }
    let sequence: HortonSequence = seq.parse()?;
    // validate the whole range before printing anything
    TreeRank::new(sequence.clone(), last.clone())?;
    let mut out = String::new();
    let mut i = first;
    while i <= last {
        let r = TreeRank::new(sequence.clone(), i.clone())?;
        out.push_str(&strahler::unrank(&r)?.to_string());
        out.push('\n');
        i += 1u32;
    }
    Ok(out.into_bytes())
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read(path)?)
    }
}

fn encode(input: &Path) -> Result<Vec<u8>> {
    let text = String::from_utf8(read_input(input)?)
        .map_err(|_| CliError::Format("input is not UTF-8 text".into()))?;
    let tree: PlaneTree = text.trim_end_matches(['\n', '\r']).parse()?;
    Ok(codec::encode_bytes(&tree))
}

fn decode(input: &Path) -> Result<Vec<u8>> {
    let tree = codec::decode_bytes(&read_input(input)?)?;
    Ok(format!("{tree}\n").into_bytes())
}

fn entropy(vertices: u64) -> Result<Vec<u8>> {
    let h = entropy_tn(vertices)?.value;
    let residual = if vertices >= 4 {
        fixed(entropy_asymptotic_residual(vertices)?.value)
    } else {
        String::new()
    };
    let mut w = csv_writer();
    w.write_record(["N", "entropy_bits", "bits_per_vertex", "residual"])
        .map_err(csv_err)?;
    w.write_record([vertices.to_string(), fixed(h), fixed(h / vertices as f64), residual])
        .map_err(csv_err)?;
    finish(w)
}
