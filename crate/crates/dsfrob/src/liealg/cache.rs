//! Optional on-disk cache for structure constants.
//!
//! Format (version 1), one file per (type, rank, backend):
//!   line 1: `dsfrob-structure-constants 1`
//!   line 2: `algebra <TYPE> <RANK> <BACKEND> dim <N>`
//!   line 3: `degrees d_0 ... d_{N-1}`
//!   line 4: `simple i_0 ... i_{r-1}`
//!   line 5: `exponents e_1 ... e_r`
//!   then one line per nonzero constant `I J K p/q`, 0-based indices,
//!   sorted lexicographically by (I, J, K).
//!
//! The cache is an optimization only: loaded data goes through the same
//! normalization and verification as freshly built data.

use std::path::PathBuf;

use num_traits::Zero;

use crate::linalg::Mat;
use crate::qn::{fmt_q, parse_q, Q};

use super::{Backend, LieAlgebraData, SimpleType};

pub const ENV_CACHE_DIR: &str = "DSFROB_CACHE_DIR";
const FORMAT_VERSION: u32 = 1;

fn cache_dir() -> Option<PathBuf> {
    if let Ok(d) = std::env::var(ENV_CACHE_DIR) {
        if d.is_empty() {
            return None;
        }
        return Some(PathBuf::from(d));
    }
    std::env::var("HOME")
        .ok()
        .map(|h| PathBuf::from(h).join(".cache").join("dsfrob"))
}

fn cache_path(ty: SimpleType, rank: usize, backend: Backend) -> Option<PathBuf> {
    cache_dir().map(|d| {
        d.join(format!(
            "{}{}-{}-v{}.sc",
            ty.letter(),
            rank,
            backend.name(),
            FORMAT_VERSION
        ))
    })
}

pub fn store(data: &LieAlgebraData) {
    let Some(path) = cache_path(data.ty, data.rank, data.backend) else {
        return;
    };
    let mut out = String::new();
    out.push_str(&format!("dsfrob-structure-constants {FORMAT_VERSION}\n"));
    out.push_str(&format!(
        "algebra {} {} {} dim {}\n",
        data.ty.letter(),
        data.rank,
        data.backend.name(),
        data.dim
    ));
    let join = |v: Vec<String>| v.join(" ");
    out.push_str(&format!(
        "degrees {}\n",
        join(data.degrees.iter().map(|d| d.to_string()).collect())
    ));
    out.push_str(&format!(
        "simple {}\n",
        join(data.simple_pos.iter().map(|d| d.to_string()).collect())
    ));
    out.push_str(&format!(
        "exponents {}\n",
        join(data.exponents.iter().map(|d| d.to_string()).collect())
    ));
    let mut lines = Vec::new();
    for a in 0..data.dim {
        for b in 0..data.dim {
            for (k, v) in &data.bracket_table[a * data.dim + b] {
                if !v.is_zero() {
                    lines.push((a, b, *k, fmt_q(v)));
                }
            }
        }
    }
    lines.sort();
    for (a, b, k, v) in lines {
        out.push_str(&format!("{a} {b} {k} {v}\n"));
    }
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    let _ = std::fs::write(path, out);
}

pub fn load(ty: SimpleType, rank: usize, backend: Backend) -> Option<LieAlgebraData> {
    let path = cache_path(ty, rank, backend)?;
    let text = std::fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    let header = lines.next()?;
    if header != format!("dsfrob-structure-constants {FORMAT_VERSION}") {
        return None;
    }
    let alg = lines.next()?;
    let parts: Vec<&str> = alg.split_whitespace().collect();
    if parts.len() != 6 || parts[0] != "algebra" {
        return None;
    }
    if parts[1] != ty.letter().to_string()
        || parts[2] != rank.to_string()
        || parts[3] != backend.name()
    {
        return None;
    }
    let dim: usize = parts[5].parse().ok()?;
    let ints = |l: &str, tag: &str| -> Option<Vec<i64>> {
        let mut it = l.split_whitespace();
        if it.next()? != tag {
            return None;
        }
        it.map(|s| s.parse().ok()).collect()
    };
    let degrees = ints(lines.next()?, "degrees")?;
    let simple = ints(lines.next()?, "simple")?;
    let exponents = ints(lines.next()?, "exponents")?;
    if degrees.len() != dim || simple.len() != rank || exponents.len() != rank {
        return None;
    }
    let mut table: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim * dim];
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let p: Vec<&str> = line.split_whitespace().collect();
        if p.len() != 4 {
            return None;
        }
        let (a, b, k): (usize, usize, usize) =
            (p[0].parse().ok()?, p[1].parse().ok()?, p[2].parse().ok()?);
        if a >= dim || b >= dim || k >= dim {
            return None;
        }
        table[a * dim + b].push((k, parse_q(p[3])?));
    }
    let mut data = LieAlgebraData {
        ty,
        rank,
        dim,
        backend,
        bracket_table: table,
        form: Mat::identity(dim),
        exponents: exponents.iter().map(|&e| e as u64).collect(),
        coxeter_minus_one: *exponents.last()? as u64,
        degrees,
        simple_pos: simple.iter().map(|&i| i as usize).collect(),
    };
    super::chevalley::normalize_form(&mut data).ok()?;
    if !data.check_antisymmetry() || !data.check_jacobi() {
        return None;
    }
    Some(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_cache_dir() {
        let tmp = std::env::temp_dir().join(format!("dsfrob-cache-test-{}", std::process::id()));
        std::env::set_var(ENV_CACHE_DIR, &tmp);
        let fresh = super::super::chevalley::build(SimpleType::A, 2).unwrap();
        store(&fresh);
        let loaded = load(SimpleType::A, 2, Backend::Chevalley).unwrap();
        assert_eq!(loaded.dim, fresh.dim);
        assert_eq!(loaded.form, fresh.form);
        for (a, b) in fresh
            .bracket_table
            .iter()
            .zip(&loaded.bracket_table)
        {
            let mut x = a.clone();
            let mut y = b.clone();
            x.sort_by_key(|(k, _)| *k);
            y.sort_by_key(|(k, _)| *k);
            assert_eq!(x, y);
        }
        std::env::remove_var(ENV_CACHE_DIR);
        let _ = std::fs::remove_dir_all(tmp);
    }
}
