//! Command-line front end and the line-oriented pair file format.
//!
//! A `.alg` file describes a presentation and, optionally, a generating
//! subspace and expectations used by the census checker:
//!
//! ```text
//! name: A_4
//! vars: x, y
//! relations:
//!   x^3
//!   y^2
//! U: x, y, x^2, x*y
//! complement: x^2*y
//! expect_equation: z0^2*z5 - z0*z1*z4 - z0*z2*z3 + z1^2*z2
//! expect_degree: 3
//! expect_singular: z0, z1
//! expect_normal: no
//! ```
//!
//! `#` starts a comment, `relations:` opens a block of one relation per line,
//! every other key takes its value on the same line.  Reports are printed in
//! a fixed order with no timestamps, so identical invocations produce
//! identical bytes.

use std::io::Write;

use serde::Serialize;

use crate::artin::{LocalAlgebra, Presentation};
use crate::construct;
use crate::error::{Error, Result};
use crate::exactpoly::Poly;
use crate::families;
use crate::geometry::{verify_singular_subspace, LinearSubspace, SingularVerdict};
use crate::hpair::HPair;

/// Parsed `.alg` file.  Only `vars` and `relations` are mandatory; pair
/// commands additionally need `U`.
#[derive(Clone, Debug, Default)]
pub struct PresentationFile {
    pub name: Option<String>,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub u: Option<Vec<String>>,
    pub complement: Option<String>,
    pub expect_equation: Option<String>,
    pub expect_degree: Option<u32>,
    /// Coordinates asserted to cut out the entire singular locus; an empty
    /// list asserts smoothness.
    pub expect_singular: Option<Vec<String>>,
    pub expect_normal: Option<bool>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<PresentationFile> {
        let mut file = PresentationFile::default();
        let mut seen: Vec<String> = Vec::new();
        let mut in_relations = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(h) => &raw[..h],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let key_value = line.split_once(':');
            if key_value.is_none() {
                if in_relations {
                    file.relations.push(line.to_string());
                    continue;
                }
                return Err(Error::FileFormat(format!(
                    "line {}: expected `key: value`, got {:?}",
                    lineno + 1,
                    line
                )));
            }
            let (key, value) = key_value.expect("checked above");
            let key = key.trim();
            let value = value.trim();
            if seen.iter().any(|s| s == key) {
                return Err(Error::FileFormat(format!("duplicate section {key:?}")));
            }
            seen.push(key.to_string());
            in_relations = false;
            match key {
                "name" => file.name = Some(value.to_string()),
                "vars" => file.vars = split_list(value),
                "relations" => {
                    in_relations = true;
                    if !value.is_empty() {
                        return Err(Error::FileFormat(
                            "relations go one per line below `relations:`".into(),
                        ));
                    }
                }
                "U" => file.u = Some(split_list(value)),
                "complement" => file.complement = Some(value.to_string()),
                "expect_equation" => file.expect_equation = Some(value.to_string()),
                "expect_degree" => {
                    file.expect_degree = Some(value.parse().map_err(|_| {
                        Error::FileFormat(format!("expect_degree is not a number: {value:?}"))
                    })?)
                }
                "expect_singular" => {
                    file.expect_singular = Some(if value == "none" {
                        Vec::new()
                    } else {
                        split_list(value)
                    })
                }
                "expect_normal" => {
                    file.expect_normal = Some(match value {
                        "yes" => true,
                        "no" => false,
                        other => {
                            return Err(Error::FileFormat(format!(
                                "expect_normal must be yes or no, got {other:?}"
                            )))
                        }
                    })
                }
                other => {
                    return Err(Error::FileFormat(format!("unknown section {other:?}")));
                }
            }
        }
        if file.vars.is_empty() {
            return Err(Error::FileFormat("missing vars section".into()));
        }
        if file.relations.is_empty() {
            return Err(Error::FileFormat("missing relations section".into()));
        }
        Ok(file)
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Presentation::parse(&names, &self.relations)
    }

    pub fn build(&self, cap: Option<u32>) -> Result<LocalAlgebra> {
        let mut p = self.presentation()?;
        if let Some(cap) = cap {
            p = p.with_cap(cap);
        }
        p.build()
    }

    /// Build the algebra and assemble the pair from the `U` and `complement`
    /// sections.  `U` is required here; `complement` defaults like the API.
    pub fn build_pair(&self, cap: Option<u32>) -> Result<HPair> {
        let u_texts = self.u.as_ref().ok_or_else(|| {
            Error::FileFormat("this command needs a U section in the file".into())
        })?;
        let algebra = self.build(cap)?;
        let mut u_vectors = Vec::with_capacity(u_texts.len());
        for t in u_texts {
            u_vectors.push(algebra.coords_of(&Poly::parse(algebra.vars(), t)?)?);
        }
        let complement = match &self.complement {
            Some(t) => Some(algebra.coords_of(&Poly::parse(algebra.vars(), t)?)?),
            None => None,
        };
        HPair::new(&algebra, u_vectors, complement)
    }

    /// Indices of the `expect_singular` coordinates within `z0..z{n-1}`.
    pub fn singular_indices(&self, num_vars: usize) -> Result<Option<Vec<usize>>> {
        let Some(names) = &self.expect_singular else {
            return Ok(None);
        };
        let mut out = Vec::with_capacity(names.len());
        for name in names {
            let idx: Option<usize> = name.strip_prefix('z').and_then(|s| s.parse().ok());
            match idx {
                Some(i) if i < num_vars => out.push(i),
                _ => {
                    return Err(Error::FileFormat(format!(
                        "expect_singular entry {name:?} is not a coordinate of P^{}",
                        num_vars - 1
                    )))
                }
            }
        }
        Ok(Some(out))
    }
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Structured result shared by every command.  The key set is fixed;
/// fields a command does not produce are null, so consumers can rely on
/// the schema.  Serialization order is declaration order.
#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub command: String,
    pub dim: Option<usize>,
    pub hilbert: Option<Vec<usize>>,
    pub socle_dim: Option<usize>,
    pub gorenstein: Option<bool>,
    pub nilpotency_degree: Option<u32>,
    pub nondegenerate: Option<bool>,
    pub unique_action: Option<bool>,
    pub equation: Option<String>,
    pub degree: Option<u32>,
    pub action: Option<Vec<String>>,
    pub certificates: Vec<String>,
    pub warnings: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            dim: None,
            hilbert: None,
            socle_dim: None,
            gorenstein: None,
            nilpotency_degree: None,
            nondegenerate: None,
            unique_action: None,
            equation: None,
            degree: None,
            action: None,
            certificates: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn fill_algebra(&mut self, algebra: &LocalAlgebra) {
        self.dim = Some(algebra.dim());
        self.hilbert = Some(algebra.hilbert_function());
        self.socle_dim = Some(algebra.socle().dim());
        self.gorenstein = Some(algebra.is_gorenstein());
        self.nilpotency_degree = Some(algebra.nilpotency());
        self.warnings.extend(algebra.warnings().iter().cloned());
    }

    /// Human-readable rendering: one `key: value` line per present field.
    fn render(&self) -> String {
        let mut s = String::new();
        if let Some(v) = self.dim {
            s += &format!("dim: {v}\n");
        }
        if let Some(v) = &self.hilbert {
            let parts: Vec<String> = v.iter().map(usize::to_string).collect();
            s += &format!("hilbert: {}\n", parts.join(", "));
        }
        if let Some(v) = self.socle_dim {
            s += &format!("socle_dim: {v}\n");
        }
        if let Some(v) = self.gorenstein {
            s += &format!("gorenstein: {v}\n");
        }
        if let Some(v) = self.nilpotency_degree {
            s += &format!("nilpotency_degree: {v}\n");
        }
        if let Some(v) = self.nondegenerate {
            s += &format!("nondegenerate: {v}\n");
        }
        if let Some(v) = self.unique_action {
            s += &format!("unique_action: {v}\n");
        }
        if let Some(v) = &self.equation {
            s += &format!("equation: {v}\n");
        }
        if let Some(v) = self.degree {
            s += &format!("degree: {v}\n");
        }
        if let Some(rows) = &self.action {
            s += "action:\n";
            for row in rows {
                s += &format!("  {row}\n");
            }
        }
        for c in &self.certificates {
            s += &format!("certificate: {c}\n");
        }
        for w in &self.warnings {
            s += &format!("warning: {w}\n");
        }
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
struct Options {
    format: Format,
    max_degree: Option<u32>,
    seed: u64,
    order: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
enum Command {
    Analyze(String),
    Equation(String),
    Action(String),
    Reduce(String),
    TwoActions(String),
    Shrink(String),
    AddVar(String),
    Family(usize, usize),
    Census,
    Member(String, String),
}

struct Outcome {
    report: Report,
    text: String,
    exit: i32,
}

const USAGE: &str = "\
usage: addact [flags] <command>

commands:
  analyze <file>       dimension, Hilbert function, socle, Gorenstein and
                       action-uniqueness verdicts
  equation <file>      hypersurface equation of the pair (needs U)
  action <file>        rows of the action matrix (needs U)
  reduce <file>        quotient by the largest ideal inside U
  two-actions <file>   two non-equivalent actions for a degenerate pair
  shrink <file>        replace the last irredundant generator by its
                       variable multiples
  addvar <file>        extend the pair by a fresh square-zero variable
  family <n> <d>       non-degenerate pair of dimension n+1, degree d
  census               recheck the bundled dimension-six catalog
  member <f> <file>    is f in the ideal generated by the relations?

flags:
  --format json|text   output format (default text)
  --max-degree <N>     truncation cap for algebra builds
  --seed <N>           seed for singular-locus sampling (default 0)
  --order <i,j,...>    permutation applied to the relations (shrink only)

exit codes: 0 success, 1 domain error or census mismatch, 2 usage error
";

pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`run`] but writing to caller-supplied streams, for tests.
pub fn run_with_io<S: AsRef<str>>(
    args: &[S],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (command, options) = match parse_args(args) {
        Ok(parsed) => parsed,
        Err(message) => {
            let _ = writeln!(err, "usage error: {message}");
            let _ = write!(err, "{USAGE}");
            return 2;
        }
    };
    match dispatch(&command, &options) {
        Ok(outcome) => {
            match options.format {
                Format::Json => {
                    let rendered = serde_json::to_string_pretty(&outcome.report)
                        .expect("report serializes");
                    let _ = writeln!(out, "{rendered}");
                }
                Format::Text => {
                    let _ = write!(out, "{}", outcome.text);
                }
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn parse_args<S: AsRef<str>>(args: &[S]) -> std::result::Result<(Command, Options), String> {
    let mut options =
        Options { format: Format::Text, max_degree: None, seed: 0, order: None };
    let mut positional: Vec<&str> = Vec::new();
    let mut it = args.iter().map(AsRef::as_ref);
    while let Some(arg) = it.next() {
        match arg {
            "--format" => match it.next() {
                Some("json") => options.format = Format::Json,
                Some("text") => options.format = Format::Text,
                other => return Err(format!("--format takes json or text, got {other:?}")),
            },
            "--max-degree" => {
                let v = it.next().ok_or("--max-degree needs a number")?;
                options.max_degree =
                    Some(v.parse().map_err(|_| format!("--max-degree is not a number: {v:?}"))?);
            }
            "--seed" => {
                let v = it.next().ok_or("--seed needs an integer")?;
                let signed: i64 =
                    v.parse().map_err(|_| format!("--seed is not an integer: {v:?}"))?;
                options.seed = signed as u64;
            }
            "--order" => {
                let v = it.next().ok_or("--order needs a comma-separated permutation")?;
                let mut indices = Vec::new();
                for part in v.split(',') {
                    let part = part.trim();
                    indices.push(
                        part.parse()
                            .map_err(|_| format!("--order entry is not an index: {part:?}"))?,
                    );
                }
                options.order = Some(indices);
            }
            flag if flag.starts_with("--") => return Err(format!("unknown flag {flag:?}")),
            word => positional.push(word),
        }
    }
    let command = match positional.as_slice() {
        ["analyze", file] => Command::Analyze(file.to_string()),
        ["equation", file] => Command::Equation(file.to_string()),
        ["action", file] => Command::Action(file.to_string()),
        ["reduce", file] => Command::Reduce(file.to_string()),
        ["two-actions", file] => Command::TwoActions(file.to_string()),
        ["shrink", file] => Command::Shrink(file.to_string()),
        ["addvar", file] => Command::AddVar(file.to_string()),
        ["family", n, d] => {
            let n = n.parse().map_err(|_| format!("family: n is not a number: {n:?}"))?;
            let d = d.parse().map_err(|_| format!("family: d is not a number: {d:?}"))?;
            Command::Family(n, d)
        }
        ["census"] => Command::Census,
        ["member", f, file] => Command::Member(f.to_string(), file.to_string()),
        [] => return Err("no command given".into()),
        words => return Err(format!("unrecognized command line: {}", words.join(" "))),
    };
    if options.order.is_some() && !matches!(command, Command::Shrink(_)) {
        return Err("--order only applies to the shrink command".into());
    }
    Ok((command, options))
}

fn load(path: &str) -> Result<PresentationFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::FileFormat(format!("cannot read {path}: {e}")))?;
    PresentationFile::parse(&text)
}

fn dispatch(command: &Command, options: &Options) -> Result<Outcome> {
    match command {
        Command::Analyze(path) => analyze_command(&load(path)?, options),
        Command::Equation(path) => equation_command(&load(path)?, options),
        Command::Action(path) => action_command(&load(path)?, options),
        Command::Reduce(path) => reduce_command(&load(path)?, options),
        Command::TwoActions(path) => two_actions_command(&load(path)?, options),
        Command::Shrink(path) => shrink_command(&load(path)?, options),
        Command::AddVar(path) => addvar_command(&load(path)?, options),
        Command::Family(n, d) => family_command(*n, *d),
        Command::Census => census_command(options),
        Command::Member(f, path) => member_command(f, &load(path)?),
    }
}

/// Serialize a pair back into the file format, prefixed by `#` notes, so
/// the pair-producing commands compose with the file-consuming ones.
fn pair_to_alg(name: &str, pair: &HPair, notes: &[String]) -> String {
    let mut s = String::new();
    for note in notes {
        s += &format!("# {note}\n");
    }
    s += &format!("name: {name}\n");
    s += &format!("vars: {}\n", pair.algebra().vars().names().join(", "));
    s += "relations:\n";
    for r in pair.algebra().presentation().relations() {
        s += &format!("  {r}\n");
    }
    let u: Vec<String> = pair.u_polys().iter().map(Poly::to_string).collect();
    s += &format!("U: {}\n", u.join(", "));
    s += &format!("complement: {}\n", pair.complement_poly());
    s
}

fn derived_name(file: &PresentationFile, suffix: &str) -> String {
    match &file.name {
        Some(n) => format!("{n}_{suffix}"),
        None => suffix.to_string(),
    }
}

fn analyze_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let mut report = Report::new("analyze");
    let pair = match file.u {
        Some(_) => Some(file.build_pair(options.max_degree)?),
        None => None,
    };
    let standalone;
    let algebra = match &pair {
        Some(p) => p.algebra(),
        None => {
            standalone = file.build(options.max_degree)?;
            &standalone
        }
    };
    report.fill_algebra(algebra);
    if let Some(p) = &pair {
        let uniqueness = p.uniqueness_report()?;
        report.nondegenerate = Some(uniqueness.nondegenerate);
        report.unique_action = Some(uniqueness.nondegenerate);
        report.certificates.push(uniqueness.message.clone());
        report.certificates.push(format!(
            "largest ideal inside U has dimension {}",
            uniqueness.largest_ideal_dim
        ));
    }
    let text = report.render();
    Ok(Outcome { report, text, exit: 0 })
}

fn equation_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let pair = file.build_pair(options.max_degree)?;
    let equation = pair.hypersurface_equation()?;
    let mut report = Report::new("equation");
    report.dim = Some(pair.dim());
    report.equation = Some(equation.to_string());
    report.degree = Some(equation.degree());
    let text = format!("{equation}\n");
    Ok(Outcome { report, text, exit: 0 })
}

fn action_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let pair = file.build_pair(options.max_degree)?;
    let matrix = pair.action_matrix()?;
    let rows = matrix.row_strings();
    let mut report = Report::new("action");
    report.dim = Some(pair.dim());
    report.action = Some(rows.clone());
    let mut text = String::new();
    for row in &rows {
        text += row;
        text.push('\n');
    }
    Ok(Outcome { report, text, exit: 0 })
}

fn reduce_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let pair = file.build_pair(options.max_degree)?;
    let outcome = pair.reduce(None)?;
    let reduced = &outcome.pair;
    let mut report = Report::new("reduce");
    report.fill_algebra(reduced.algebra());
    let equation = reduced.hypersurface_equation()?;
    report.equation = Some(equation.to_string());
    report.degree = Some(equation.degree());
    report.certificates.push(format!("dimension: {} -> {}", pair.dim(), reduced.dim()));
    let kept: Vec<String> = outcome.kept_z_indices.iter().map(|i| format!("z{i}")).collect();
    report.certificates.push(format!("kept coordinates: {}", kept.join(", ")));
    report.certificates.extend(outcome.notes.iter().cloned());
    let text = pair_to_alg(&derived_name(file, "reduced"), reduced, &report.certificates);
    Ok(Outcome { report, text, exit: 0 })
}

fn two_actions_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let pair = file.build_pair(options.max_degree)?;
    let two = construct::two_actions(&pair)?;
    let first = two.first.hypersurface_equation()?;
    let second = two.second.hypersurface_equation()?;
    let mut report = Report::new("two-actions");
    report.dim = Some(pair.dim());
    report.certificates.push(two.certificate.clone());
    report.certificates.push(format!("first equation: {first}"));
    report.certificates.push(format!("second equation: {second}"));
    let text = format!(
        "certificate: {}\nfirst equation: {first}\nsecond equation: {second}\n",
        two.certificate
    );
    Ok(Outcome { report, text, exit: 0 })
}

fn shrink_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let presentation = file.presentation()?;
    let mut relations = presentation.relations().to_vec();
    if let Some(order) = &options.order {
        let mut seen = vec![false; relations.len()];
        let valid = order.len() == relations.len()
            && order.iter().all(|&i| {
                i < relations.len() && !std::mem::replace(&mut seen[i], true)
            });
        if !valid {
            return Err(Error::InvalidRange(format!(
                "--order must be a permutation of 0..{}",
                relations.len()
            )));
        }
        relations = order.iter().map(|&i| relations[i].clone()).collect();
    }
    let shrink = construct::shrink_generators(presentation.vars(), &relations)?;
    let mut report = Report::new("shrink");
    report.dim = Some(shrink.dim_after());
    report.certificates.push(format!("distinguished generator: {}", shrink.distinguished()));
    report
        .certificates
        .push(format!("dimension: {} -> {}", shrink.dim_before(), shrink.dim_after()));
    report.certificates.push(format!("certificate degree: {}", shrink.certificate_degree()));
    report.certificates.push(format!("passes: {}", shrink.passes()));
    let mut text = String::new();
    for note in &report.certificates {
        text += &format!("# {note}\n");
    }
    text += &format!("name: {}\n", derived_name(file, "shrunk"));
    text += &format!("vars: {}\n", presentation.vars().names().join(", "));
    text += "relations:\n";
    for r in shrink.shrunk_relations() {
        text += &format!("  {r}\n");
    }
    Ok(Outcome { report, text, exit: 0 })
}

fn addvar_command(file: &PresentationFile, options: &Options) -> Result<Outcome> {
    let pair = file.build_pair(options.max_degree)?;
    let extended = construct::add_variable_pair(&pair)?;
    let mut report = Report::new("addvar");
    report.fill_algebra(extended.algebra());
    let equation = extended.hypersurface_equation()?;
    report.equation = Some(equation.to_string());
    report.degree = Some(equation.degree());
    let names = extended.algebra().vars().names();
    report.certificates.push(format!(
        "added variable: {}",
        names.last().expect("extended algebra has variables")
    ));
    report.certificates.push(format!("dimension: {} -> {}", pair.dim(), extended.dim()));
    let text = pair_to_alg(&derived_name(file, "extended"), &extended, &report.certificates);
    Ok(Outcome { report, text, exit: 0 })
}

fn family_command(n: usize, d: usize) -> Result<Outcome> {
    let pair = families::family_pair(n, d)?;
    let mut report = Report::new("family");
    report.fill_algebra(pair.algebra());
    let uniqueness = pair.uniqueness_report()?;
    report.nondegenerate = Some(uniqueness.nondegenerate);
    report.unique_action = Some(uniqueness.nondegenerate);
    let equation = pair.hypersurface_equation()?;
    report.equation = Some(equation.to_string());
    report.degree = Some(equation.degree());
    report.certificates.push(uniqueness.message.clone());
    let text = pair_to_alg(&format!("family_{n}_{d}"), &pair, &report.certificates);
    Ok(Outcome { report, text, exit: 0 })
}

fn census_command(options: &Options) -> Result<Outcome> {
    let entries = families::catalog6();
    let total = entries.len();
    let mut report = Report::new("census");
    let mut text = String::new();
    let mut matches = 0;
    for entry in &entries {
        let mut problems: Vec<String> = Vec::new();
        let pair = entry.file.build_pair(options.max_degree)?;
        let equation = pair.hypersurface_equation()?;
        if equation.to_string() != entry.expect_equation {
            problems.push(format!(
                "equation mismatch: computed {equation}, expected {}",
                entry.expect_equation
            ));
        }
        if equation.degree() != entry.expect_degree {
            problems.push(format!(
                "degree mismatch: computed {}, expected {}",
                equation.degree(),
                entry.expect_degree
            ));
        }
        let locus = if entry.expect_singular.is_empty() {
            LinearSubspace::empty(pair.dim())
        } else {
            LinearSubspace::coordinate(pair.dim(), &entry.expect_singular)?
        };
        let singular =
            verify_singular_subspace(&equation, &locus, true, options.seed, 100)?;
        if !singular.all_vanish {
            let which = singular
                .nonvanishing_partial
                .map(|i| format!(" (partial derivative {i} does not vanish on it)"))
                .unwrap_or_default();
            problems.push(format!(
                "stated singular locus is not inside the singular set{which}"
            ));
        }
        let computed_normal = match singular.verdict {
            SingularVerdict::NotNormal => Some(false),
            SingularVerdict::Normal | SingularVerdict::NormalSmooth => Some(true),
            SingularVerdict::NotContained | SingularVerdict::CodimensionOnly => None,
        };
        match computed_normal {
            Some(v) if v == entry.expect_normal => {}
            Some(v) => problems.push(format!(
                "normality mismatch: computed {v}, expected {}",
                entry.expect_normal
            )),
            None => problems.push("normality could not be decided from the stated locus".into()),
        }
        problems.extend(singular.sample_failures.iter().cloned());
        if problems.is_empty() {
            matches += 1;
            report.certificates.push(format!("{}: ok", entry.name));
            text += &format!("{}: ok\n", entry.name);
        } else {
            report.certificates.push(format!("{}: MISMATCH", entry.name));
            text += &format!("{}: MISMATCH\n", entry.name);
            for p in &problems {
                report.warnings.push(format!("{}: {p}", entry.name));
                text += &format!("  {p}\n");
            }
        }
    }
    let summary = format!("{matches}/{total} match");
    report.certificates.push(summary.clone());
    text += &summary;
    text.push('\n');
    let exit = if matches == total { 0 } else { 1 };
    Ok(Outcome { report, text, exit })
}

fn member_command(f_text: &str, file: &PresentationFile) -> Result<Outcome> {
    let presentation = file.presentation()?;
    let f = Poly::parse(presentation.vars(), f_text)?;
    let inside = construct::ideal_membership(presentation.vars(), presentation.relations(), &f)?;
    let mut report = Report::new("member");
    report.certificates.push(format!("{f} in the ideal: {inside}"));
    Ok(Outcome { report, text: format!("{inside}\n"), exit: 0 })
}
