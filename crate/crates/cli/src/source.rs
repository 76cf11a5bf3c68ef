//! Family specs, construction steps and element references.

use latkit_core::constructions::{
    congruence_generated, direct_product, double_interval, multichain_lattice, ordinal_sum,
    quotient, wedge_sum,
};
use latkit_core::families::{
    boolean, chain, distributive_from_poset, divisor_lattice, fixture, tamari, weak_order,
};
use latkit_core::io::{lattice_from_json, poset_from_json};
use latkit_core::{DoublingSequence, Graph, Lattice, Poset};

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| usage(format!("{what}: expected a number, got {s:?}")))
}

pub const FAMILY_HELP: &str = "boolean:N, chain:N, divisors:N, weak:N, tamari:N, \
fixture:NAME (fig1, m3, n5, fig2_right, fig6), jposet:FILE, cu:[[a,b],...]";

/// Builds a lattice from a family spec such as `tamari:3`.
pub fn family(spec: &str) -> Result<Lattice, CliError> {
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("family {spec:?} needs NAME:ARG; one of {FAMILY_HELP}")))?;
    let lattice = match name {
        "boolean" => boolean(number(arg, "boolean")?)?,
        "chain" => chain(number(arg, "chain")?)?,
        "divisors" => divisor_lattice(number(arg, "divisors")?)?,
        "weak" => weak_order(number(arg, "weak")?)?,
        "tamari" => tamari(number(arg, "tamari")?)?,
        "fixture" => fixture(arg)?,
        "jposet" => distributive_from_poset(&poset_file(arg)?)?,
        "cu" => {
            let seq: DoublingSequence = serde_json::from_str(arg)
                .map_err(|e| usage(format!("cu trace: {e}")))?;
            seq.replay()?.lattice
        }
        _ => return Err(usage(format!("unknown family {name:?}; one of {FAMILY_HELP}"))),
    };
    Ok(lattice)
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

pub fn lattice_file(path: &str) -> Result<Lattice, CliError> {
    Ok(lattice_from_json(&read(path)?)?)
}

pub fn poset_file(path: &str) -> Result<Poset, CliError> {
    Ok(poset_from_json(&read(path)?)?)
}

/// Resolves an element by label, then by id; `bottom` and `top` are
/// accepted as names of the bounds.
pub fn element(l: &Lattice, s: &str) -> Result<usize, CliError> {
    let s = s.trim();
    match s {
        "bottom" => return Ok(l.bottom()),
        "top" => return Ok(l.top()),
        _ => {}
    }
    if let Some(x) = l.element_by_label(s) {
        return Ok(x);
    }
    match s.parse::<usize>() {
        Ok(x) if x < l.len() => Ok(x),
        _ => Err(usage(format!("no element {s:?}"))),
    }
}

pub fn elements(l: &Lattice, s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| element(l, t))
        .collect()
}

pub fn pair(l: &Lattice, s: &str) -> Result<(usize, usize), CliError> {
    match elements(l, s)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(usage(format!("expected two elements, got {s:?}"))),
    }
}

/// Applies one `--then` step.
pub fn step(l: Lattice, spec: &str) -> Result<Lattice, CliError> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    Ok(match name {
        "double" => {
            let (a, b) = pair(&l, arg)?;
            double_interval(&l, a, b)?.lattice
        }
        "dual" => l.dual(),
        "quotient" => {
            let theta = congruence_generated(&l, &elements(&l, arg)?)?;
            quotient(&l, &theta)?.lattice
        }
        "product" => direct_product(&l, &family(arg)?),
        "ordinal" => ordinal_sum(&l, &family(arg)?),
        "wedge" => wedge_sum(&l, &family(arg)?),
        "multichain" => multichain_lattice(&l, number(arg, "multichain")?)?.lattice,
        _ => {
            return Err(usage(format!(
                "unknown step {name:?}; one of double:A,B, dual, quotient:J,..., \
                 product:FAMILY, ordinal:FAMILY, wedge:FAMILY, multichain:M"
            )))
        }
    })
}

/// `complete:N`, `cycle:N`, `path:N`, `empty:N` or `edges:N:0-1,1-2,...`.
pub fn graph(spec: &str) -> Result<Graph, CliError> {
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("graph {spec:?} needs NAME:ARG")))?;
    Ok(match name {
        "complete" => Graph::complete(number(arg, "complete")?),
        "cycle" => Graph::cycle(number(arg, "cycle")?),
        "path" => Graph::path(number(arg, "path")?),
        "empty" => Graph::empty(number(arg, "empty")?),
        "edges" => {
            let (n, list) = arg.split_once(':').unwrap_or((arg, ""));
            let n: usize = number(n, "edges")?;
            let edges = list
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    let (u, v) = t
                        .split_once('-')
                        .ok_or_else(|| usage(format!("edge {t:?} needs U-V")))?;
                    let (u, v): (usize, usize) = (number(u, "edge")?, number(v, "edge")?);
                    if u >= n || v >= n {
                        return Err(usage(format!("edge {t:?} outside 0..{n}")));
                    }
                    Ok((u, v))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Graph::new((0..n).collect(), edges)
        }
        _ => {
            return Err(usage(format!(
                "unknown graph {name:?}; one of complete:N, cycle:N, path:N, empty:N, edges:N:U-V,..."
            )))
        }
    })
}

pub fn usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| number(t, "list"))
        .collect()
}
