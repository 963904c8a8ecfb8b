//! `schurlab`: batch front end for the schurlab library.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input,
//! 3 a scale guard was hit, 4 an internal consistency error.

mod io;
mod suites;
mod words;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schurlab::algebra::{act_word, unit, Elem, Engine, Tensor};
use schurlab::coideal::{
    act_i_word, comult_i, embed_i, embed_j, i_weights, transfer_i, transfer_j, JCoproduct, JFamily, JStage,
};
use schurlab::combinatorics::{is_i_matrix, j_block, j_compositions, ZeroOneColumnMatrix};
use schurlab::coproduct::{delta_elem, delta_word};
use schurlab::duality::TensorSpaces;
use schurlab::schur_a::{slice, transfer, AffineStage, TypeA, TypeACoproduct};
use schurlab::stability::tensor_to_canonical;
use schurlab::{LaurentPoly, Mat, Result, SchurError};

use io::{Ambient, ElementFile, Format, Sink, TensorFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraType {
    A,
    AffineA,
    Jmath,
    Imath,
}

impl AlgebraType {
    fn tag(self) -> &'static str {
        match self {
            AlgebraType::A => "a",
            AlgebraType::AffineA => "affine-a",
            AlgebraType::Jmath => "jmath",
            AlgebraType::Imath => "imath",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Standard,
    Canonical,
}

#[derive(Parser)]
#[command(name = "schurlab", version, about = "Exact computations in q-Schur and ȷ/ıSchur algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Algebra: a, affine-a, jmath or imath.
    #[arg(long = "type", value_enum, default_value = "a")]
    kind: AlgebraType,
    /// Number of steps.
    #[arg(long)]
    n: usize,
    /// Degree.
    #[arg(long)]
    d: u32,
    /// Split `d1,d2` for comultiplications.
    #[arg(long, value_parser = parse_split)]
    split: Option<(u32, u32)>,
    /// Bound on |i − j| for affine enumeration.
    #[arg(long, default_value_t = 2)]
    spread: u32,
    /// Field sizes for the point-counting oracle.
    #[arg(long = "q-list", value_delimiter = ',', default_value = "3,5,7")]
    q_list: Vec<usize>,
    /// Element files; read in order.
    #[arg(long = "in")]
    input: Vec<PathBuf>,
    /// Generator words; used after the element files.
    #[arg(long)]
    word: Vec<String>,
    /// Basis for the output.
    #[arg(long, value_enum, default_value = "standard")]
    basis: Basis,
    /// Output file; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of the inputs, left to right.
    Multiply(Common),
    /// Comultiplication of one input.
    Comult(Common),
    /// Transfer map to degree d − n (d − n + 1 for imath).
    Transfer(Common),
    /// Embedding of a ȷ or ı element into type A.
    Embed(Common),
    /// ζ on the standard basis of the ȷ tensor space.
    Zeta(Common),
    /// Canonical basis tables of a slice.
    Cb(Common),
    /// Run a verification suite and write its certificates.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_split(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected d1,d2")?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

/// The engine for the chosen algebra.
enum Alg {
    A(Engine<TypeA>),
    J(Engine<JFamily>),
}

struct Job {
    c: Common,
    alg: Alg,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(SchurError::Validation(msg.into()))
}

impl Job {
    fn new(c: Common) -> Result<Self> {
        if c.n == 0 {
            return invalid("n must be positive");
        }
        let alg = match c.kind {
            AlgebraType::A => Alg::A(Engine::new(TypeA::finite(c.n))),
            AlgebraType::AffineA => Alg::A(Engine::new(TypeA::affine(c.n))),
            AlgebraType::Jmath | AlgebraType::Imath => Alg::J(Engine::new(JFamily::new(c.n)?)),
        };
        if let Some((d1, d2)) = c.split {
            if d1 + d2 != c.d {
                return invalid(format!("split {d1},{d2} does not add up to d = {}", c.d));
            }
        }
        Ok(Self { c, alg })
    }

    fn ambient(&self, d: u32) -> Ambient {
        Ambient { kind: self.c.kind.tag().into(), n: self.c.n, d, split: None }
    }

    fn unit(&self, d: u32) -> Elem {
        match (&self.alg, self.c.kind) {
            (Alg::A(e), _) => unit(e.family(), d),
            (Alg::J(_), AlgebraType::Imath) => {
                Elem::from_terms(i_weights(d, self.c.n).iter().map(|l| (Mat::diag(l, false), LaurentPoly::one())))
            }
            (Alg::J(e), _) => unit(e.family(), d),
        }
    }

    fn eval_word(&self, src: &str) -> Result<Elem> {
        let toks = words::parse(src)?;
        let one = self.unit(self.c.d);
        match (&self.alg, self.c.kind) {
            (Alg::A(e), _) => act_word(e.family(), &words::type_a(&toks)?, &one),
            (Alg::J(e), AlgebraType::Imath) => act_i_word(e.family(), &words::imath(&toks)?, &one),
            (Alg::J(e), _) => act_word(e.family(), &words::jmath(&toks)?, &one),
        }
    }

    fn canonical(&self, a: &Mat) -> Result<Elem> {
        Ok(match &self.alg {
            Alg::A(e) => (*e.canonical(a)?).clone(),
            Alg::J(e) => (*e.canonical(a)?).clone(),
        })
    }

    fn to_canonical(&self, x: &Elem) -> Result<Elem> {
        match &self.alg {
            Alg::A(e) => e.to_canonical(x),
            Alg::J(e) => e.to_canonical(x),
        }
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        match &self.alg {
            Alg::A(e) => e.mul(x, y),
            Alg::J(e) => e.mul(x, y),
        }
    }

    fn check_matrix(&self, m: &Mat) -> Result<()> {
        let periodic = self.c.kind == AlgebraType::AffineA;
        if m.n() != self.c.n || m.is_periodic() != periodic {
            return invalid(format!("{m} does not belong to type {} with n = {}", self.c.kind.tag(), self.c.n));
        }
        if matches!(self.c.kind, AlgebraType::Jmath | AlgebraType::Imath) && !m.is_j_symmetric() {
            return invalid(format!("{m} is not centrally symmetric"));
        }
        if self.c.kind == AlgebraType::Imath && !is_i_matrix(m) {
            return invalid(format!("{m} is not an ı matrix"));
        }
        Ok(())
    }

    fn read_file(&self, path: &std::path::Path) -> Result<Elem> {
        let f = io::read_element(path)?;
        if f.ambient.kind != self.c.kind.tag() || f.ambient.n != self.c.n {
            return invalid(format!("{}: ambient {:?} does not match the flags", path.display(), f.ambient));
        }
        for m in f.terms.matrices() {
            self.check_matrix(m)?;
        }
        match f.basis.as_str() {
            "standard" => Ok(f.terms),
            "canonical" => {
                let mut out = Elem::zero();
                for (m, c) in f.terms.iter() {
                    out.add_scaled(&self.canonical(m)?, c);
                }
                Ok(out)
            }
            other => invalid(format!("unknown basis {other:?}")),
        }
    }

    /// Inputs in order: element files first, then words.
    fn inputs(&self) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for p in &self.c.input {
            out.push(self.read_file(p)?);
        }
        for w in &self.c.word {
            out.push(self.eval_word(w)?);
        }
        Ok(out)
    }

    fn single_input(&self) -> Result<Elem> {
        let mut xs = self.inputs()?;
        if xs.len() != 1 {
            return invalid(format!("expected one input, got {}", xs.len()));
        }
        Ok(xs.remove(0))
    }

    fn sink(&self) -> Sink<'_> {
        Sink { path: self.c.out.as_deref(), format: self.c.format }
    }

    fn emit_element(&self, x: Elem, d: u32) -> Result<()> {
        let (basis, terms) = match self.c.basis {
            Basis::Standard => ("standard", x),
            Basis::Canonical => ("canonical", self.to_canonical(&x)?),
        };
        self.sink().element(&ElementFile { basis: basis.into(), ambient: self.ambient(d), terms })
    }

    fn multiply(&self) -> Result<()> {
        let xs = self.inputs()?;
        let Some((first, rest)) = xs.split_first() else {
            return invalid("multiply needs at least one input");
        };
        let mut cur = first.clone();
        for x in rest {
            cur = self.mul(&cur, x)?;
        }
        self.emit_element(cur, self.c.d)
    }

    fn comult(&self) -> Result<()> {
        let Some((d1, d2)) = self.c.split else {
            return invalid("comult needs --split d1,d2");
        };
        // a single word goes through the generator route, which is the only
        // one available off the Chevalley image in the affine case
        let word_only = self.c.input.is_empty() && self.c.word.len() == 1;
        let t: Tensor = match (&self.alg, self.c.kind) {
            (Alg::A(e), kind) => {
                let stage = if kind == AlgebraType::AffineA { AffineStage::Full } else { AffineStage::Twisted };
                let cp = TypeACoproduct::new(e.family().clone(), d1, d2, stage);
                if word_only {
                    delta_word(&cp, &words::type_a(&words::parse(&self.c.word[0])?)?, self.c.d)?
                } else {
                    delta_elem(&cp, e, &self.single_input()?)?
                }
            }
            (Alg::J(e), AlgebraType::Imath) => comult_i(e, &self.single_input()?, d1, d2)?,
            (Alg::J(e), _) => {
                let cp = JCoproduct::new(e.family().clone(), d1, d2, JStage::Renormalized);
                if word_only {
                    delta_word(&cp, &words::jmath(&words::parse(&self.c.word[0])?)?, self.c.d)?
                } else {
                    delta_elem(&cp, e, &self.single_input()?)?
                }
            }
        };
        let (basis, terms) = match (self.c.basis, &self.alg) {
            (Basis::Standard, _) => ("standard⊗standard", t),
            (Basis::Canonical, Alg::A(e)) => ("canonical⊗canonical", tensor_to_canonical(e, e, &t)?),
            (Basis::Canonical, Alg::J(e)) => {
                let right = Engine::new(TypeA::finite(self.c.n));
                ("canonical⊗canonical", tensor_to_canonical(e, &right, &t)?)
            }
        };
        let mut ambient = self.ambient(self.c.d);
        ambient.split = Some((d1, d2));
        self.sink().tensor(&TensorFile { basis: basis.into(), ambient, terms })
    }

    fn transfer(&self) -> Result<()> {
        let x = self.single_input()?;
        let n = self.c.n as u32;
        let (y, step) = match (&self.alg, self.c.kind) {
            (_, AlgebraType::AffineA) => return invalid("the affine transfer map is not available"),
            (Alg::A(e), _) => (transfer(e, &x)?, n),
            (Alg::J(e), AlgebraType::Imath) => (transfer_i(e, &x)?, n - 1),
            (Alg::J(e), _) => (transfer_j(e, &x)?, n),
        };
        if self.c.d < step {
            return invalid(format!("transfer needs d ≥ {step}"));
        }
        self.emit_element(y, self.c.d - step)
    }

    fn embed(&self) -> Result<()> {
        let x = self.single_input()?;
        let y = match (&self.alg, self.c.kind) {
            (Alg::J(e), AlgebraType::Imath) => embed_i(e, &x)?,
            (Alg::J(e), _) => embed_j(e, &x)?,
            _ => return invalid("embed applies to jmath and imath"),
        };
        let ambient = Ambient { kind: "a".into(), n: self.c.n, d: self.c.d, split: None };
        let terms = match self.c.basis {
            Basis::Standard => y,
            Basis::Canonical => Engine::new(TypeA::finite(self.c.n)).to_canonical(&y)?,
        };
        let basis = match self.c.basis {
            Basis::Standard => "standard",
            Basis::Canonical => "canonical",
        };
        self.sink().element(&ElementFile { basis: basis.into(), ambient, terms })
    }

    fn zeta(&self) -> Result<()> {
        if self.c.kind != AlgebraType::Jmath {
            return invalid("zeta needs --type jmath");
        }
        let ts = TensorSpaces::new(self.c.d as usize, self.c.n)?;
        let mut rows: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, LaurentPoly>> = BTreeMap::new();
        for a in ts.basis() {
            let img: BTreeMap<ZeroOneColumnMatrix, LaurentPoly> = match self.c.basis {
                Basis::Canonical => ts.zeta_canonical_expansion(&a)?,
                Basis::Standard => {
                    let z = ts.zeta(&Elem::basis(ts.matrix_j(&a)?))?;
                    let mut out = BTreeMap::new();
                    for (m, c) in z.iter() {
                        let b = ts.unembed(m).ok_or_else(|| {
                            SchurError::ConsistencyFailure(format!("ζ left the tensor slice at {m}"))
                        })?;
                        out.insert(b, c.clone());
                    }
                    out
                }
            };
            rows.insert(a.rows.clone(), img.into_iter().map(|(b, c)| (b.rows, c)).collect());
        }
        let basis = match self.c.basis {
            Basis::Standard => "standard",
            Basis::Canonical => "canonical",
        };
        self.sink().pi_table(&rows, basis)
    }

    fn cb(&self) -> Result<()> {
        let mats: Vec<Mat> = match self.c.kind {
            AlgebraType::A => slice(self.c.n, self.c.d, false, 0),
            AlgebraType::AffineA => slice(self.c.n, self.c.d, true, self.c.spread),
            AlgebraType::Jmath | AlgebraType::Imath => {
                let comps = j_compositions(self.c.d, self.c.n);
                let mut out = Vec::new();
                for ro in &comps {
                    for co in &comps {
                        out.extend(j_block(ro, co));
                    }
                }
                if self.c.kind == AlgebraType::Imath {
                    out.retain(is_i_matrix);
                }
                out
            }
        };
        let mut tables = Vec::new();
        for a in mats {
            let e = self.canonical(&a)?;
            tables.push((a, e));
        }
        self.sink().kl_tables(&tables)
    }
}

enum Outcome {
    Done,
    VerifyFailed,
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Verify { suite, common } => {
            let sink = Sink { path: common.out.as_deref(), format: common.format };
            let params = suites::Params {
                suite,
                kind: common.kind,
                n: common.n,
                d: common.d,
                split: common.split,
                spread: common.spread,
                q_list: common.q_list.clone(),
            };
            if let Some((d1, d2)) = common.split {
                if d1 + d2 != common.d {
                    return invalid(format!("split {d1},{d2} does not add up to d = {}", common.d));
                }
            }
            let report = suites::run(params)?;
            sink.report(&report, &report.certificates)?;
            Ok(if report.status == "pass" { Outcome::Done } else { Outcome::VerifyFailed })
        }
        Cmd::Multiply(c) => Job::new(c)?.multiply().map(|_| Outcome::Done),
        Cmd::Comult(c) => Job::new(c)?.comult().map(|_| Outcome::Done),
        Cmd::Transfer(c) => Job::new(c)?.transfer().map(|_| Outcome::Done),
        Cmd::Embed(c) => Job::new(c)?.embed().map(|_| Outcome::Done),
        Cmd::Zeta(c) => Job::new(c)?.zeta().map(|_| Outcome::Done),
        Cmd::Cb(c) => Job::new(c)?.cb().map(|_| Outcome::Done),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerifyFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("schurlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
