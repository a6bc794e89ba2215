use std::path::PathBuf;
use std::thread;

use anyhow::Result;
use normcover::cover::{
    check_bounds_in, gamma_in, sigma_in, verify_cover, verify_normal_cover, CoverCertificate,
};
use normcover::lattice::{all_subgroups, SubgroupLattice};
use normcover::spec::GroupSpec;
use normcover::structure::{conjugacy_classes, is_cyclic, Subgroup};
use normcover::suite::{run_check, SuiteConfig, CHECKS};
use normcover::{Caps, Error, Perm, PermGroup, Value};

use crate::cache::{fingerprint, key_of, Cache};
use crate::record::Record;

/// A group named on the command line, already built.
pub struct Target {
    pub id: String,
    pub group: PermGroup,
}

fn id_of(spec: &GroupSpec) -> String {
    match spec {
        GroupSpec::Named(f) => f.to_string(),
        GroupSpec::Gens { degree, gens } => {
            let list: Vec<String> = gens.iter().map(Perm::to_string).collect();
            format!("gens:{};deg:{degree}", list.join(","))
        }
    }
}

/// Parses `text` after `prefix`, reporting columns relative to `text`.
fn parse_with_prefix(prefix: &str, text: &str) -> normcover::Result<GroupSpec> {
    GroupSpec::parse(&format!("{prefix}{text}")).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column: column.saturating_sub(prefix.chars().count()).max(1),
            message,
        },
        other => other,
    })
}

/// Builds every `--name` and every `--gens`/`--deg` pair, in that order.
pub fn targets(
    names: &[String],
    gens: &[String],
    degs: &[usize],
    caps: &Caps,
) -> normcover::Result<Vec<Target>> {
    let mut specs = Vec::new();
    for n in names {
        specs.push(parse_with_prefix("name: ", n)?);
    }
    for (g, d) in gens.iter().zip(degs) {
        specs.push(parse_with_prefix("gens: ", &format!("{g} deg: {d}"))?);
    }
    specs
        .into_iter()
        .map(|s| {
            let group = s.build(caps)?;
            Ok(Target {
                id: id_of(&s),
                group,
            })
        })
        .collect()
}

fn members(cert: &CoverCertificate) -> String {
    if cert.generators.is_empty() {
        return "none".to_string();
    }
    cert.generators
        .iter()
        .map(|gs| {
            let list: Vec<String> = gs.iter().map(Perm::to_string).collect();
            format!("<{}>", list.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn opt(b: Option<bool>) -> String {
    b.map_or("na".to_string(), |b| b.to_string())
}

/// The computed part of a `compute` record, or `None` when a cap stopped it.
fn compute_fields(group: &PermGroup, caps: &Caps) -> normcover::Result<Option<Record>> {
    let lattice = match all_subgroups(group, caps) {
        Ok(l) => l,
        Err(e) if e.is_cap() => return Ok(None),
        Err(e) => return Err(e),
    };
    let classes = match conjugacy_classes(group, caps) {
        Ok(c) => c,
        Err(e) if e.is_cap() => return Ok(None),
        Err(e) => return Err(e),
    };
    let bounds = match check_bounds_in(&lattice, &classes, caps) {
        Ok(b) => b,
        Err(e) if e.is_cap() => return Ok(None),
        Err(e) => return Err(e),
    };
    let s = sigma_in(&lattice)?;
    let g = gamma_in(&lattice, &classes)?;
    let mut r = Record::new();
    r.push("sigma", s.value)
        .push("gamma", g.value)
        .push("mu", bounds.mu)
        .push("m", bounds.m)
        .push("cohn", bounds.cohn_ok)
        .push("basso", bounds.basso_ok)
        .push("basso_equality", opt(bounds.basso_equality))
        .push("permut", bounds.permut_ok)
        .push("gamma_le_sigma", bounds.gamma_le_sigma)
        .push("sigma_eq_gamma", opt(bounds.sigma_eq_gamma))
        .push("quotients", bounds.quotients_ok)
        .push("bounds_ok", bounds.all_ok())
        .push("sigma_verified", s.verified)
        .push("gamma_verified", g.verified)
        .push("sigma_cert", members(&s))
        .push("gamma_cert", members(&g));
    Ok(Some(r))
}

fn header(t: &Target) -> Record {
    Record::new()
        .with("group", &t.id)
        .with("degree", t.group.degree())
        .with("order", t.group.order())
}

/// One record per target, in input order. Targets missing from the cache
/// are computed concurrently.
pub fn compute(targets: &[Target], caps: &Caps, cache: Option<&mut Cache>) -> Result<Vec<Record>> {
    let keys: Vec<String> = targets.iter().map(|t| fingerprint(&t.group)).collect();
    let cached: Vec<Option<Record>> = keys
        .iter()
        .map(|k| cache.as_ref().and_then(|c| c.lookup(k, caps)))
        .collect();
    let fresh: Vec<Option<normcover::Result<Option<Record>>>> = thread::scope(|s| {
        let handles: Vec<_> = targets
            .iter()
            .zip(&cached)
            .map(|(t, hit)| {
                if hit.is_some() {
                    None
                } else {
                    Some(s.spawn(|| compute_fields(&t.group, caps)))
                }
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.map(|h| h.join().expect("worker panicked")))
            .collect()
    });
    let mut cache = cache;
    let mut out = Vec::new();
    for ((t, key), (hit, computed)) in targets.iter().zip(&keys).zip(cached.into_iter().zip(fresh))
    {
        let body = match (hit, computed) {
            (Some(r), _) => r,
            (None, Some(result)) => {
                let (complete, body) = match result? {
                    Some(r) => (true, r),
                    None => (false, Record::new().with("skipped", "cap")),
                };
                if let Some(c) = cache.as_deref_mut() {
                    c.store(key, caps, complete, &body)?;
                }
                body
            }
            (None, None) => unreachable!("every miss is computed"),
        };
        let mut r = header(t);
        r.extend(&body);
        out.push(r);
    }
    Ok(out)
}

pub const COMPUTE_COLUMNS: &[&str] = &[
    "group",
    "degree",
    "order",
    "sigma",
    "gamma",
    "mu",
    "m",
    "bounds_ok",
];

fn lattice_or_skip(t: &Target, caps: &Caps) -> normcover::Result<Result<SubgroupLattice, Record>> {
    match all_subgroups(&t.group, caps) {
        Ok(l) => Ok(Ok(l)),
        Err(e) if e.is_cap() => Ok(Err(header(t).with("skipped", "cap"))),
        Err(e) => Err(e),
    }
}

/// A summary record per target followed by one record per conjugacy class of subgroups.
pub fn lattice(targets: &[Target], caps: &Caps) -> normcover::Result<Vec<Record>> {
    let mut out = Vec::new();
    for t in targets {
        let l = match lattice_or_skip(t, caps)? {
            Ok(l) => l,
            Err(skip) => {
                out.push(skip);
                continue;
            }
        };
        out.push(
            header(t)
                .with("subgroups", l.len())
                .with("classes", l.classes().len()),
        );
        for (c, members) in l.classes().iter().enumerate() {
            let i = members[0];
            let gens: Vec<String> = l
                .table()
                .perms(l.gens(i))
                .iter()
                .map(Perm::to_string)
                .collect();
            out.push(
                Record::new()
                    .with("group", &t.id)
                    .with("class", c)
                    .with("order", l.order(i))
                    .with("size", members.len())
                    .with("normal", members.len() == 1)
                    .with("maximal", l.is_maximal(i))
                    .with("cyclic", is_cyclic(&l.perm_group(i)?))
                    .with("gens", format!("<{}>", gens.join(","))),
            );
        }
    }
    Ok(out)
}

pub const LATTICE_COLUMNS: &[&str] = &[
    "group", "class", "order", "size", "normal", "maximal", "cyclic", "gens",
];

fn replay(group: &PermGroup, cert: &CoverCertificate, caps: &Caps) -> normcover::Result<bool> {
    if cert.value == Value::Inf {
        return Ok(true);
    }
    let subs: Vec<Subgroup> = cert
        .generators
        .iter()
        .map(|g| PermGroup::from_generators(group.degree(), g.clone()).map(Subgroup::new))
        .collect::<normcover::Result<_>>()?;
    match cert.kind {
        normcover::CoverKind::Sigma => verify_cover(group, &subs, caps),
        normcover::CoverKind::Gamma => verify_normal_cover(group, &subs, caps),
    }
}

/// Sigma and gamma certificates per target, each replayed through the verifiers.
pub fn cover_certificate(targets: &[Target], caps: &Caps) -> normcover::Result<Vec<Record>> {
    let mut out = Vec::new();
    for t in targets {
        let l = match lattice_or_skip(t, caps)? {
            Ok(l) => l,
            Err(skip) => {
                out.push(skip);
                continue;
            }
        };
        let classes = conjugacy_classes(&t.group, caps)?;
        for cert in [sigma_in(&l)?, gamma_in(&l, &classes)?] {
            out.push(
                Record::new()
                    .with("group", &t.id)
                    .with("kind", cert.kind)
                    .with("value", cert.value)
                    .with("verified", cert.verified)
                    .with("replayed", replay(&t.group, &cert, caps)?)
                    .with("upper_bound_only", cert.upper_bound_only)
                    .with("members", members(&cert)),
            );
        }
    }
    Ok(out)
}

pub const CERTIFICATE_COLUMNS: &[&str] =
    &["group", "kind", "value", "verified", "replayed", "members"];

/// One record per check; the flag is whether every check passed.
pub fn verify_paper(
    cfg: &SuiteConfig,
    only: &[String],
    mut cache: Option<&mut Cache>,
) -> Result<(Vec<Record>, bool)> {
    for o in only {
        if !CHECKS.contains(&o.as_str()) {
            anyhow::bail!(Error::UnsupportedParams(format!(
                "unknown check '{o}'; known checks: {}",
                CHECKS.join(", ")
            )));
        }
    }
    let mut out = Vec::new();
    let mut all = true;
    for id in CHECKS
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|o| o == *c))
    {
        let key = key_of(&[
            "check",
            id,
            &cfg.seed.to_string(),
            &cfg.wreath_samples.to_string(),
            &cfg.sl2_samples.to_string(),
            &cfg.caps.lattice.to_string(),
            &cfg.caps.enumeration.to_string(),
            &cfg.caps.degree.to_string(),
        ]);
        let hit = cache.as_deref().and_then(|c| c.lookup(&key, &cfg.caps));
        let r = match hit {
            Some(r) => r,
            None => {
                let r = Record::parse(&run_check(id, cfg)?.record())
                    .ok_or_else(|| anyhow::anyhow!("malformed record for check {id}"))?;
                if let Some(c) = cache.as_deref_mut() {
                    c.store(&key, &cfg.caps, true, &r)?;
                }
                r
            }
        };
        all &= r.get("pass") == Some("true");
        out.push(r);
    }
    Ok((out, all))
}

pub const CHECK_COLUMNS: &[&str] = &["check", "pass", "failures", "first_failure"];

/// The cache path from `--cache` or the environment, opened.
pub fn open_cache(path: Option<&PathBuf>) -> Result<Option<Cache>> {
    path.map(|p| Cache::open(p)).transpose()
}
