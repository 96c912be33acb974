//! Command-line front end. [`run_command`] does all the work and returns the
//! exit status with the rendered output, so it can be driven in-process.
//!
//! Exit status: 0 on success, 1 when an asserted law fails, 2 on a usage
//! error, 3 when the scenario or the request does not validate.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::hfe::UnionMode;
use crate::hfss::{Hfss, SoftClass};
use crate::laws::{run_suite, GenConfig, SuiteReport};
use crate::mapping::{compose, composite_image, PointMap, SoftMapping};
use crate::scenario::{
    mapping_to_doc, parse_scenario, set_to_doc, to_json_pretty, MappingDoc, Scenario, SetDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// Evaluate hesitant fuzzy soft images, preimages and composites, and run
/// the law suite.
#[derive(Debug, Parser)]
#[command(name = "hfsoft", version)]
pub struct Cli {
    /// Scenario document (JSON).
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,
    /// Union semantics; defaults to the scenario's option, else `sorted`.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<UnionMode>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    pub cases: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Image of a soft set under a mapping.
    Image {
        #[arg(long)]
        map: String,
        #[arg(long)]
        set: String,
    },
    /// Inverse image of a soft set under a mapping.
    Preimage {
        #[arg(long)]
        map: String,
        #[arg(long)]
        set: String,
    },
    /// The composite `outer ∘ inner`, optionally applied to a soft set.
    Compose {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        set: Option<String>,
    },
    /// Inverse of a bijective mapping.
    Invert {
        #[arg(long)]
        map: String,
    },
    /// Injective / surjective / bijective / many-one report.
    Props {
        #[arg(long)]
        map: String,
    },
    /// Union of two soft sets over the same class.
    Union {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run the law suite.
    Laws,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(status: i32, message: impl Into<String>) -> Self {
        CommandOutput {
            status,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if status == EXIT_OK {
                CommandOutput::ok(text)
            } else {
                CommandOutput::fail(status, text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => CommandOutput::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Invalid(e)) => CommandOutput::fail(EXIT_INVALID, format!("error: {e}\n")),
    }
}

fn load(cli: &Cli) -> Result<Scenario, Failure> {
    let path = cli
        .scenario
        .as_ref()
        .ok_or_else(|| Failure::Usage("this command needs --scenario PATH".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(parse_scenario(&text)?)
}

fn class_name<'a>(scenario: &'a Scenario, class: &SoftClass) -> &'a str {
    scenario.class_name(class).unwrap_or("?")
}

#[derive(Serialize)]
struct SetResult<'a> {
    command: &'a str,
    inputs: Vec<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mode: Option<UnionMode>,
    result: SetDoc,
}

#[derive(Serialize)]
struct MappingResult<'a> {
    command: &'a str,
    inputs: Vec<&'a str>,
    result: MappingDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    action: Option<SetResult<'a>>,
}

#[derive(Serialize)]
struct PropsResult<'a> {
    command: &'a str,
    mapping: &'a str,
    injective: bool,
    surjective: bool,
    bijective: bool,
    many_one: bool,
}

fn render_set(title: &str, class: &str, mode: Option<UnionMode>, set: &Hfss) -> String {
    let mode = mode.map(|m| format!(", mode {m}")).unwrap_or_default();
    format!("# {title} in {class}{mode}\n{set}\n")
}

fn render_mapping(title: &str, source: &str, target: &str, m: &SoftMapping) -> String {
    let line = |p: &PointMap| p.to_string();
    format!(
        "# {title}: {source} -> {target}\np: {}\nq: {}\n",
        line(m.element_map()),
        line(m.attribute_map())
    )
}

fn execute(cli: &Cli) -> Result<CommandOutput, Failure> {
    if let Command::Laws = cli.command {
        let cfg = GenConfig::with_seed(cli.seed).cases(cli.cases);
        let report = run_suite(&cfg)?;
        let text = match cli.format {
            Format::Json => to_json_pretty(&report) + "\n",
            Format::Table => render_suite(&report),
        };
        let status = if report.passed {
            EXIT_OK
        } else {
            EXIT_LAW_FAILED
        };
        return Ok(CommandOutput {
            status,
            stdout: text,
            stderr: String::new(),
        });
    }

    let scenario = load(cli)?;
    let mode = cli.mode.unwrap_or(scenario.mode);
    let json = cli.format == Format::Json;
    let text = match &cli.command {
        Command::Image { map, set } => {
            let m = &scenario.mapping(map)?.mapping;
            let input = &scenario.set(set)?.set;
            let out = m.image(input, mode)?;
            let class = class_name(&scenario, out.class());
            if json {
                to_json_pretty(&SetResult {
                    command: "image",
                    inputs: vec![map, set],
                    mode: Some(mode),
                    result: set_to_doc(class, &out),
                })
            } else {
                render_set(&format!("{map}({set})"), class, Some(mode), &out)
            }
        }
        Command::Preimage { map, set } => {
            let m = &scenario.mapping(map)?.mapping;
            let input = &scenario.set(set)?.set;
            let out = m.inverse_image(input)?;
            let class = class_name(&scenario, out.class());
            if json {
                to_json_pretty(&SetResult {
                    command: "preimage",
                    inputs: vec![map, set],
                    mode: None,
                    result: set_to_doc(class, &out),
                })
            } else {
                render_set(&format!("{map}^-1({set})"), class, None, &out)
            }
        }
        Command::Compose { outer, inner, set } => {
            let g = &scenario.mapping(outer)?.mapping;
            let f = &scenario.mapping(inner)?.mapping;
            let gf = compose(g, f)?;
            let source = class_name(&scenario, gf.source());
            let target = class_name(&scenario, gf.target());
            let title = format!("{outer}∘{inner}");
            let action = match set {
                Some(name) => {
                    let input = &scenario.set(name)?.set;
                    Some((name.as_str(), composite_image(g, f, input, mode)?))
                }
                None => None,
            };
            if json {
                to_json_pretty(&MappingResult {
                    command: "compose",
                    inputs: vec![outer, inner],
                    result: mapping_to_doc(source, target, &gf),
                    action: action.map(|(name, out)| SetResult {
                        command: "composite_image",
                        inputs: vec![outer, inner, name],
                        mode: Some(mode),
                        result: set_to_doc(target, &out),
                    }),
                })
            } else {
                let mut text = render_mapping(&title, source, target, &gf);
                if let Some((name, out)) = action {
                    text.push_str(&render_set(
                        &format!("({title})({name})"),
                        target,
                        Some(mode),
                        &out,
                    ));
                }
                text
            }
        }
        Command::Invert { map } => {
            let inverse = scenario.mapping(map)?.mapping.invert()?;
            let source = class_name(&scenario, inverse.source());
            let target = class_name(&scenario, inverse.target());
            if json {
                to_json_pretty(&MappingResult {
                    command: "invert",
                    inputs: vec![map],
                    result: mapping_to_doc(source, target, &inverse),
                    action: None,
                })
            } else {
                render_mapping(&format!("{map}^-1"), source, target, &inverse)
            }
        }
        Command::Props { map } => {
            let m = &scenario.mapping(map)?.mapping;
            let props = PropsResult {
                command: "props",
                mapping: map,
                injective: m.is_injective(),
                surjective: m.is_surjective(),
                bijective: m.is_bijective(),
                many_one: m.is_many_one(),
            };
            if json {
                to_json_pretty(&props)
            } else {
                format!(
                    "# {map}\ninjective: {}\nsurjective: {}\nbijective: {}\nmany-one: {}\n",
                    props.injective, props.surjective, props.bijective, props.many_one
                )
            }
        }
        Command::Union { left, right } => {
            let l = &scenario.set(left)?.set;
            let r = &scenario.set(right)?.set;
            let out = l.union(r, mode)?;
            let class = class_name(&scenario, out.class());
            if json {
                to_json_pretty(&SetResult {
                    command: "union",
                    inputs: vec![left, right],
                    mode: Some(mode),
                    result: set_to_doc(class, &out),
                })
            } else {
                render_set(&format!("{left} ∪ {right}"), class, Some(mode), &out)
            }
        }
        Command::Laws => unreachable!("handled above"),
    };
    let text = if text.ends_with('\n') {
        text
    } else {
        text + "\n"
    };
    Ok(CommandOutput::ok(text))
}

fn render_suite(report: &SuiteReport) -> String {
    let cfg = &report.config;
    let mut out = format!("# law suite: seed {}, {} cases\n", cfg.seed, cfg.cases);
    for law in &report.laws {
        let status = match (law.asserted, law.failures) {
            (true, 0) => "ok    ",
            (true, _) => "FAIL  ",
            (false, _) => "report",
        };
        let mode = law.mode.map(|m| m.as_str()).unwrap_or("-");
        out.push_str(&format!(
            "{status} {:<34} {:<6} cases={:<7} failures={}\n",
            law.law, mode, law.cases, law.failures
        ));
        if law.asserted && law.failures > 0 {
            if let Some(c) = &law.counterexample {
                for line in c.lines() {
                    out.push_str("         ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
    }
    out.push_str(if report.passed {
        "suite: PASS\n"
    } else {
        "suite: FAIL\n"
    });
    out
}
