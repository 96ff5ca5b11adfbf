//! Input resolution: load a graph file or build one from a generator spec.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use qwrank_core::generators::{
    diamond_graph, example5_graph, path_graph, scale_free, star_graph, tailed_graph,
    ScaleFreeParams,
};
use qwrank_core::graph::{load_edgelist, load_matrix_market, LoadedGraph};
use qwrank_core::{DirectedGraph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// Pick by file extension (.mtx/.mm is Matrix Market, anything else
    /// an edge list)
    Auto,
    Edgelist,
    MatrixMarket,
}

pub fn load_graph(path: &Path, format: InputFormat) -> Result<LoadedGraph> {
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    let use_matrix_market = match format {
        InputFormat::MatrixMarket => true,
        InputFormat::Edgelist => false,
        InputFormat::Auto => matches!(
            path.extension().and_then(|e| e.to_str()),
            Some(ext) if ext.eq_ignore_ascii_case("mtx") || ext.eq_ignore_ascii_case("mm")
        ),
    };
    if use_matrix_market {
        load_matrix_market(reader)
    } else {
        load_edgelist(reader)
    }
}

/// A graph constructor named on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Path(usize),
    Diamond(usize),
    Star(usize),
    Tailed(usize, usize),
    Example5,
    ScaleFree {
        n: usize,
        alpha: f64,
        beta: f64,
        gamma: f64,
    },
}

impl GeneratorSpec {
    pub fn build(&self, seed: u64, delta_in: f64, delta_out: f64) -> Result<DirectedGraph> {
        match *self {
            GeneratorSpec::Path(n) => path_graph(n),
            GeneratorSpec::Diamond(n) => diamond_graph(n),
            GeneratorSpec::Star(n) => star_graph(n),
            GeneratorSpec::Tailed(n1, n2) => tailed_graph(n1, n2),
            GeneratorSpec::Example5 => Ok(example5_graph()),
            GeneratorSpec::ScaleFree {
                n,
                alpha,
                beta,
                gamma,
            } => {
                let mut params = ScaleFreeParams::new(alpha, beta, gamma, seed)?;
                params.delta_in = delta_in;
                params.delta_out = delta_out;
                params.validate()?;
                scale_free(n, &params)
            }
        }
    }
}

/// Parse `name:params` generator specs, validating parameter ranges so
/// that bad values surface as usage errors.
pub fn parse_generator_spec(text: &str) -> std::result::Result<GeneratorSpec, String> {
    let (name, params) = match text.split_once(':') {
        Some((name, params)) => (name, params),
        None => (text, ""),
    };
    let ints = || -> std::result::Result<Vec<usize>, String> {
        params
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("invalid integer {tok:?}"))
            })
            .collect()
    };
    match name {
        "path" | "star" | "diamond" => {
            let v = ints()?;
            if v.len() != 1 {
                return Err(format!("{name} takes one size, e.g. {name}:4"));
            }
            let n = v[0];
            match name {
                "path" if n >= 2 => Ok(GeneratorSpec::Path(n)),
                "star" if n >= 2 => Ok(GeneratorSpec::Star(n)),
                "diamond" if n >= 3 => Ok(GeneratorSpec::Diamond(n)),
                _ => Err(format!("{name}:{n} is too small")),
            }
        }
        "tailed" => {
            let v = ints()?;
            if v.len() != 2 {
                return Err("tailed takes two sizes, e.g. tailed:4,4".into());
            }
            if v[0] < 1 || v[1] < 2 {
                return Err(format!("tailed:{},{} is too small", v[0], v[1]));
            }
            Ok(GeneratorSpec::Tailed(v[0], v[1]))
        }
        "example5" => {
            if params.is_empty() {
                Ok(GeneratorSpec::Example5)
            } else {
                Err("example5 takes no parameters".into())
            }
        }
        "scalefree" => {
            let tokens: Vec<&str> = params.split(',').map(str::trim).collect();
            if tokens.len() != 4 {
                return Err("scalefree takes n,alpha,beta,gamma, e.g. scalefree:128,0.4,0.55,0.05".into());
            }
            let n: usize = tokens[0]
                .parse()
                .map_err(|_| format!("invalid node count {:?}", tokens[0]))?;
            let weight = |tok: &str| -> std::result::Result<f64, String> {
                let w: f64 = tok.parse().map_err(|_| format!("invalid weight {tok:?}"))?;
                if !(0.0..=1.0).contains(&w) {
                    return Err(format!("weight {w} outside [0, 1]"));
                }
                Ok(w)
            };
            let alpha = weight(tokens[1])?;
            let beta = weight(tokens[2])?;
            let gamma = weight(tokens[3])?;
            if n < 3 {
                return Err("scalefree needs n >= 3".into());
            }
            if ((alpha + beta + gamma) - 1.0).abs() > 1e-12 {
                return Err("alpha + beta + gamma must equal 1".into());
            }
            if alpha + gamma == 0.0 {
                return Err("alpha + gamma must be positive".into());
            }
            Ok(GeneratorSpec::ScaleFree {
                n,
                alpha,
                beta,
                gamma,
            })
        }
        other => Err(format!(
            "unknown generator {other:?} (expected path, diamond, star, tailed, example5 or scalefree)"
        )),
    }
}
