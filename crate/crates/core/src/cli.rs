//! The `relstab` command line.
//!
//! Exit status is 0 for a positive verdict or plain report, 1 for a
//! negative verdict and 2 for input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::colimits::{gamma_system, hom_into_colimit, stagewise_weak_injectivity};
use crate::constructions::{induce, k_invariants};
use crate::document::{
    certificate_doc, check_certificate, module_doc, parse_document, parse_matrix, CertificateBundle, CertificateDoc,
    GroupDoc, Workspace,
};
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::idealchain::{dn_membership, local_equivalence_check, local_global_check};
use crate::matrix::ExactMatrix;
use crate::relcohom::{ext, ext_via_internal_hom, group_cohomology, support_degreewise};
use crate::ring::CoefficientRing;
use crate::stable::{cone, cosyzygy, higman_certificate, is_stable_iso, stable_hom, syzygy, HigmanOutcome};
use crate::verify;

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "relstab", version, about = "Stable module theory of finite groups over Z, Z/m and Z_(n)")]
pub struct Cli {
    /// Workspace document (JSON) defining modules and maps.
    #[arg(long, global = true)]
    doc: Option<PathBuf>,
    /// Coefficient ring: Z, Z/m or Z_(n). Overrides the document.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Group short name such as C2, S3, D8, Q8 or C2xC3. Overrides the document.
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write certificates for positive verdicts to this file.
    #[arg(long, global = true)]
    emit_cert: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Args, Debug)]
struct MapArgs {
    /// A map defined in the document.
    #[arg(long)]
    map: Option<String>,
    #[arg(long)]
    source: Option<String>,
    /// Defaults to the source.
    #[arg(long)]
    target: Option<String>,
    /// Use r·id on the source.
    #[arg(long, allow_hyphen_values = true)]
    scalar: Option<i64>,
    /// Matrix as JSON rows of decimal strings; defaults to the identity.
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the module axioms.
    Validate {
        #[arg(long)]
        module: Vec<String>,
    },
    /// Decide weak projectivity by Higman's criterion.
    Higman {
        #[arg(long)]
        module: String,
    },
    /// Stable Hom group.
    Stablehom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Decide whether a map is a stable isomorphism.
    Stableiso(MapArgs),
    /// Cone of a map.
    Cone {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Syzygy or cosyzygy.
    Syzygy {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long)]
        cosyzygy: bool,
        #[arg(long)]
        json: bool,
    },
    /// Induced module with its structure maps.
    Induce {
        #[arg(long)]
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Relative Ext groups.
    Ext {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Group cohomology H*(G, M).
    Cohomology {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Compare Ext(M, N) with H*(G, Hom_k(M, N)).
    Relasgc {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Stages of Γ_n M.
    Gamma {
        #[arg(long)]
        module: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Also report Hom(N, stage) along the chain.
        #[arg(long)]
        hom_from: Option<String>,
    },
    /// Membership in the thick ideal D_n.
    Dn {
        #[arg(long)]
        module: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Stable Hom over Z against Z_(n).
    Localcheck {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: u64,
    },
    /// Higman over Z against every Z_(p) with p dividing |G|.
    Localglobal {
        #[arg(long)]
        module: String,
    },
    /// Degreewise supports of Ext^d(M, M).
    Support {
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Re-check a certificate file.
    Checkcert { file: PathBuf },
}

struct Report {
    format: Format,
    lines: Vec<String>,
    records: Vec<String>,
    certificates: Vec<CertificateDoc>,
    status: i32,
}

impl Report {
    fn new(format: Format) -> Self {
        Report {
            format,
            lines: Vec::new(),
            records: Vec::new(),
            certificates: Vec::new(),
            status: 0,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn record(&mut self, fields: &[(&str, String)]) {
        let quote = |v: &str| {
            if v.is_empty() || v.contains(char::is_whitespace) || v.contains('"') {
                format!("\"{}\"", v.replace('"', "\\\""))
            } else {
                v.to_string()
            }
        };
        self.records.push(
            fields
                .iter()
                .map(|(k, v)| format!("{k}={}", quote(v)))
                .collect::<Vec<_>>()
                .join(" "),
        );
    }

    fn fail(&mut self) {
        self.status = 1;
    }
}

fn max_dim() -> Result<usize> {
    match std::env::var("RELSTAB_MAX_DIM") {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("RELSTAB_MAX_DIM must be a positive integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

struct Context {
    ws: Workspace,
    max_dim: usize,
}

impl Context {
    fn module(&self, expr: &str) -> Result<GModule> {
        let m = self.ws.module(expr)?;
        self.check(&m, expr)?;
        Ok(m.with_label(m.label().unwrap_or(expr).to_string()))
    }

    fn check(&self, m: &GModule, what: &str) -> Result<()> {
        if m.gens() > self.max_dim {
            return Err(Error::Unsupported(format!(
                "{what} has {} generators, above RELSTAB_MAX_DIM = {}",
                m.gens(),
                self.max_dim
            )));
        }
        Ok(())
    }

    fn map(&self, a: &MapArgs) -> Result<EquivariantMap> {
        if let Some(name) = &a.map {
            return self
                .ws
                .maps
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("no map '{name}' in the document")));
        }
        let source_name = a
            .source
            .as_deref()
            .ok_or_else(|| Error::Parse("give --map or --source".into()))?;
        let source = self.module(source_name)?;
        let target = match &a.target {
            Some(t) => self.module(t)?,
            None => source.clone(),
        };
        let ring = &self.ws.ring;
        let matrix = match (&a.matrix, a.scalar) {
            (Some(_), Some(_)) => return Err(Error::Parse("--matrix and --scalar are exclusive".into())),
            (Some(text), None) => {
                let rows: Vec<Vec<String>> =
                    serde_json::from_str(text).map_err(|e| Error::Parse(format!("--matrix: {e}")))?;
                parse_matrix(ring, target.gens(), Some(source.gens()), &rows, "--matrix")?
            }
            (None, Some(r)) => {
                if a.target.is_some() {
                    return Err(Error::Parse("--scalar acts on the source; drop --target".into()));
                }
                ExactMatrix::scalar(ring, source.gens(), &ring.from_i64(r))
            }
            (None, None) => {
                if source.gens() != target.gens() {
                    return Err(Error::Parse("give --matrix for modules of different sizes".into()));
                }
                ExactMatrix::identity(ring, source.gens())
            }
        };
        EquivariantMap::new(&source, &target, matrix)
    }
}

fn table(values: &[String]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(d, v)| format!("{d}: {v}"))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn load(cli: &Cli, validate: bool) -> Result<Workspace> {
    let mut ws = match &cli.doc {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Workspace::load(&parse_document(&text)?, validate)?
        }
        None => Workspace::new(CoefficientRing::Integers, GroupDoc::short("C2")?)?,
    };
    if cli.ring.is_some() || cli.group.is_some() {
        if !ws.modules.is_empty() && cli.doc.is_some() {
            return Err(Error::Parse("--ring/--group cannot override a document that defines modules".into()));
        }
        let ring = match &cli.ring {
            Some(r) => r.parse()?,
            None => ws.ring.clone(),
        };
        let group = match &cli.group {
            Some(g) => GroupDoc::short(g)?,
            None => ws.group_doc.clone(),
        };
        ws = Workspace::new(ring, group)?;
    }
    Ok(ws)
}

fn execute(cli: &Cli, rep: &mut Report) -> Result<()> {
    if let Command::Verify { suite } = &cli.command {
        let ids: Vec<u8> = if suite == "all" {
            verify::SUITES.iter().map(|(i, _)| *i).collect()
        } else {
            vec![verify::suite_id(suite).ok_or_else(|| {
                let names: Vec<&str> = verify::SUITES.iter().map(|(_, n)| *n).collect();
                Error::Parse(format!("unknown suite '{suite}'; expected all or one of {}", names.join(", ")))
            })?]
        };
        for r in verify::run_many(&ids) {
            rep.line(r.to_string());
            rep.record(&[
                ("suite", r.name.to_string()),
                ("id", r.id.to_string()),
                ("passed", r.passed.to_string()),
                ("detail", r.detail.clone()),
            ]);
            if !r.passed {
                rep.fail();
            }
        }
        return Ok(());
    }
    if let Command::Checkcert { file } = &cli.command {
        let text = fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
        let bundle: CertificateBundle =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
        if bundle.certificates.is_empty() {
            return Err(Error::Parse("certificate file holds no certificates".into()));
        }
        for (i, c) in bundle.certificates.iter().enumerate() {
            match check_certificate(c)? {
                Ok(()) => {
                    rep.line(format!("certificate {} ({}): valid", i + 1, c.statement));
                    rep.record(&[("certificate", (i + 1).to_string()), ("valid", "true".into())]);
                }
                Err(why) => {
                    rep.line(format!("certificate {} ({}): INVALID: {why}", i + 1, c.statement));
                    rep.record(&[
                        ("certificate", (i + 1).to_string()),
                        ("valid", "false".into()),
                        ("reason", why),
                    ]);
                    rep.fail();
                }
            }
        }
        return Ok(());
    }

    let validate_doc = !matches!(cli.command, Command::Validate { .. });
    let ctx = Context {
        ws: load(cli, validate_doc)?,
        max_dim: max_dim()?,
    };
    let group_doc = ctx.ws.group_doc.clone();
    match &cli.command {
        Command::Validate { module } => {
            let names: Vec<String> = if module.is_empty() {
                ctx.ws.modules.keys().cloned().collect()
            } else {
                module.clone()
            };
            if names.is_empty() {
                return Err(Error::Parse("nothing to validate: give --module or a document with modules".into()));
            }
            for n in &names {
                let m = ctx.module(n)?;
                match m.validate() {
                    Ok(()) => {
                        rep.line(format!("{n}: valid"));
                        rep.record(&[("module", n.clone()), ("valid", "true".into())]);
                    }
                    Err(f) => {
                        rep.line(format!("{n}: invalid: {f}"));
                        rep.record(&[("module", n.clone()), ("valid", "false".into()), ("reason", f.to_string())]);
                        rep.fail();
                    }
                }
            }
        }
        Command::Higman { module } => {
            let m = ctx.module(module)?;
            ctx.check(&induce(&m).module, "the induced module")?;
            match higman_certificate(&m)? {
                HigmanOutcome::Certified(c) => {
                    rep.line(format!("weakly projective; certificate θ = {}", c.theta));
                    rep.record(&[
                        ("module", module.clone()),
                        ("weakly_projective", "true".into()),
                        ("theta", c.theta.to_string()),
                    ]);
                    rep.certificates.push(certificate_doc(format!("{module} is weakly projective"), &c, &group_doc));
                }
                HigmanOutcome::Obstructed(o) => {
                    rep.line(format!("NOT weakly projective; obstruction: {o}"));
                    rep.record(&[
                        ("module", module.clone()),
                        ("weakly_projective", "false".into()),
                        ("obstruction", o.to_string()),
                    ]);
                    rep.fail();
                }
            }
        }
        Command::Stablehom { source, target } => {
            let (m, n) = (ctx.module(source)?, ctx.module(target)?);
            let s = stable_hom(&m, &n)?.invariants().to_string();
            rep.line(format!("stable Hom({source}, {target}) = {s}"));
            rep.record(&[("source", source.clone()), ("target", target.clone()), ("stable_hom", s)]);
        }
        Command::Stableiso(a) => {
            let f = ctx.map(a)?;
            ctx.check(&induce(&f.source).module, "the induced source")?;
            let v = is_stable_iso(&f)?;
            match &v.outcome {
                HigmanOutcome::Certified(c) => {
                    rep.line("stable isomorphism; the cone is weakly projective");
                    rep.record(&[("stable_iso", "true".into())]);
                    rep.certificates.push(certificate_doc("the cone of the map is weakly projective", c, &group_doc));
                }
                HigmanOutcome::Obstructed(o) => {
                    rep.line(format!("NOT a stable isomorphism; cone obstruction: {o}"));
                    rep.record(&[("stable_iso", "false".into()), ("obstruction", o.to_string())]);
                    rep.fail();
                }
            }
        }
        Command::Cone { map, json } => {
            let f = ctx.map(map)?;
            let c = cone(&f)?;
            ctx.check(&c.module, "the cone")?;
            let wp = higman_certificate(&c.module)?;
            let inv = k_invariants(&c.module).to_string();
            rep.line(format!(
                "cone: {} generators, underlying {inv}, {}",
                c.module.gens(),
                if wp.is_certified() { "weakly projective" } else { "NOT weakly projective" }
            ));
            rep.record(&[
                ("gens", c.module.gens().to_string()),
                ("underlying", inv),
                ("weakly_projective", wp.is_certified().to_string()),
            ]);
            if *json {
                rep.line(serde_json::to_string(&module_doc(&c.module)).expect("serialisable"));
            }
        }
        Command::Syzygy { module, times, cosyzygy: co, json } => {
            let mut m = ctx.module(module)?;
            for _ in 0..*times {
                ctx.check(&induce(&m).module, "the induced module")?;
                m = if *co { cosyzygy(&m)? } else { syzygy(&m) };
            }
            let inv = k_invariants(&m).to_string();
            let label = format!("{}^{}({module})", if *co { "Ω^-" } else { "Ω" }, times);
            rep.line(format!("{label}: {} generators, underlying {inv}", m.gens()));
            rep.record(&[("module", label), ("gens", m.gens().to_string()), ("underlying", inv)]);
            if *json {
                rep.line(serde_json::to_string(&module_doc(&m)).expect("serialisable"));
            }
        }
        Command::Induce { module, json } => {
            let m = ctx.module(module)?;
            let ind = induce(&m);
            ctx.check(&ind.module, "the induced module")?;
            let inv = k_invariants(&ind.module).to_string();
            rep.line(format!("{module}↑G: {} generators, underlying {inv}", ind.module.gens()));
            rep.line(format!("ι = {}", ind.iota.matrix));
            rep.line(format!("π = {}", ind.pi.matrix));
            rep.record(&[
                ("module", module.clone()),
                ("gens", ind.module.gens().to_string()),
                ("underlying", inv),
                ("iota", ind.iota.matrix.to_string()),
                ("pi", ind.pi.matrix.to_string()),
            ]);
            if *json {
                rep.line(serde_json::to_string(&module_doc(&ind.module)).expect("serialisable"));
            }
        }
        Command::Ext { source, target, max_degree } => {
            let (m, n) = (ctx.module(source)?, ctx.module(target)?);
            let t: Vec<String> = ext(&m, &n, *max_degree)?.invariants().iter().map(|a| a.to_string()).collect();
            emit_table(rep, "ext", &t);
        }
        Command::Cohomology { module, max_degree } => {
            let m = ctx.module(module)?;
            let t: Vec<String> = group_cohomology(&m, *max_degree)?
                .invariants()
                .iter()
                .map(|a| a.to_string())
                .collect();
            emit_table(rep, "cohomology", &t);
        }
        Command::Relasgc { source, target, max_degree } => {
            let (m, n) = (ctx.module(source)?, ctx.module(target)?);
            let cmp = ext_via_internal_hom(&m, &n, *max_degree)?;
            let direct: Vec<String> = cmp.direct.iter().map(|a| a.to_string()).collect();
            let via: Vec<String> = cmp.via_internal_hom.iter().map(|a| a.to_string()).collect();
            rep.line(format!("Ext: {}", table(&direct)));
            rep.line(format!("H*(G, Hom_k): {}", table(&via)));
            for (d, (a, b)) in direct.iter().zip(&via).enumerate() {
                rep.record(&[("degree", d.to_string()), ("ext", a.clone()), ("internal_hom", b.clone())]);
            }
            if cmp.agree() {
                rep.line("agree");
            } else {
                rep.line("DISAGREE");
                rep.fail();
            }
        }
        Command::Gamma { module, n, depth, hom_from } => {
            let m = ctx.module(module)?;
            let sys = gamma_system(&m, *n, *depth)?;
            for s in &sys.stages {
                ctx.check(s, "a stage")?;
            }
            let outcomes = stagewise_weak_injectivity(&sys)?;
            for (r, o) in sys.index_labels.iter().zip(&outcomes) {
                match o {
                    HigmanOutcome::Certified(c) => {
                        rep.line(format!("r = {r}: weakly projective"));
                        rep.certificates.push(certificate_doc(format!("stage r = {r} is weakly projective"), c, &group_doc));
                    }
                    HigmanOutcome::Obstructed(ob) => {
                        rep.line(format!("r = {r}: NOT weakly projective; obstruction: {ob}"));
                        rep.fail();
                    }
                }
                rep.record(&[("r", r.to_string()), ("weakly_projective", o.is_certified().to_string())]);
            }
            if let Some(nn) = hom_from {
                let src = ctx.module(nn)?;
                let hr = hom_into_colimit(&src, &sys)?;
                for (r, h) in hr.index_labels.iter().zip(&hr.stage_homs) {
                    rep.line(format!("Hom({nn}, stage r = {r}) = {h}"));
                    rep.record(&[("r", r.to_string()), ("hom", h.to_string())]);
                }
                rep.line(format!("Hom into the truncated colimit: {}", hr.status));
                rep.record(&[("status", hr.status.to_string())]);
            }
        }
        Command::Dn { module, p, n } => {
            let m = ctx.module(module)?;
            let v = dn_membership(&m, *p, *n)?;
            rep.line(v.to_string());
            rep.record(&[
                ("module", module.clone()),
                ("p", p.to_string()),
                ("n", n.to_string()),
                ("member", v.holds().to_string()),
            ]);
            match &v.verdict.outcome {
                HigmanOutcome::Certified(c) => {
                    rep.certificates
                        .push(certificate_doc(format!("cone of the unit for {module} is weakly projective"), c, &group_doc));
                }
                HigmanOutcome::Obstructed(_) => rep.fail(),
            }
        }
        Command::Localcheck { source, target, n } => {
            let (m, nn) = (ctx.module(source)?, ctx.module(target)?);
            let r = local_equivalence_check(&m, &nn, *n)?;
            rep.line(format!(
                "Z: {} | Z_({n}): {} | |G| divides n: {} | {}",
                r.global,
                r.local,
                if r.order_divides_n { "yes" } else { "no" },
                if r.agree() { "agree" } else { "DISAGREE" }
            ));
            rep.record(&[
                ("global", r.global.to_string()),
                ("local", r.local.to_string()),
                ("order_divides_n", r.order_divides_n.to_string()),
                ("agree", r.agree().to_string()),
            ]);
            if !r.agree() {
                rep.fail();
            }
        }
        Command::Localglobal { module } => {
            let m = ctx.module(module)?;
            let r = local_global_check(&m)?;
            let verdict = |b: bool| if b { "weakly projective" } else { "NOT weakly projective" };
            let mut parts = vec![format!("Z: {}", verdict(r.global))];
            for (p, v) in &r.local {
                parts.push(format!("Z_({p}): {}", verdict(*v)));
                rep.record(&[("ring", format!("Z_({p})")), ("weakly_projective", v.to_string())]);
            }
            rep.record(&[("ring", "Z".into()), ("weakly_projective", r.global.to_string())]);
            parts.push(if r.consistent() { "consistent".into() } else { "INCONSISTENT".into() });
            rep.line(parts.join(" | "));
            if !r.consistent() {
                rep.fail();
            }
        }
        Command::Support { module, max_degree } => {
            let m = ctx.module(module)?;
            let s = support_degreewise(&m, *max_degree)?;
            rep.line(format!("degreewise supports of Ext^d({module}, {module}); a proxy for the support variety"));
            rep.line(
                s.iter()
                    .enumerate()
                    .map(|(i, x)| format!("{}: {x}", i + 1))
                    .collect::<Vec<_>>()
                    .join(" | "),
            );
            for (i, x) in s.iter().enumerate() {
                rep.record(&[("degree", (i + 1).to_string()), ("support", x.to_string())]);
            }
        }
        Command::Verify { .. } | Command::Checkcert { .. } => unreachable!("handled above"),
    }
    Ok(())
}

fn emit_table(rep: &mut Report, kind: &str, t: &[String]) {
    rep.line(table(t));
    for (d, v) in t.iter().enumerate() {
        rep.record(&[(kind, v.clone()), ("degree", d.to_string())]);
    }
}

/// Runs the command line, writing the report to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut rep = Report::new(cli.format);
    if let Err(e) = execute(&cli, &mut rep) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    let lines = match rep.format {
        Format::Text => &rep.lines,
        Format::Records => &rep.records,
    };
    for l in lines {
        let _ = writeln!(out, "{l}");
    }
    if let Some(path) = &cli.emit_cert {
        let bundle = CertificateBundle {
            certificates: rep.certificates,
        };
        let text = serde_json::to_string_pretty(&bundle).expect("serialisable");
        if let Err(e) = fs::write(path, text) {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 2;
        }
    }
    rep.status
}
