//! A fixed list of small groups that the verification suite sweeps over.

use crate::config::Caps;
use crate::error::Result;
use crate::group::PermGroup;
use crate::spec::GroupSpec;

/// Every entry, in increasing order of group order within each line.
pub const CATALOG: &[&str] = &[
    "name: cyclic(4)",
    "name: cyclic(6)",
    "name: cyclic(12)",
    "name: elem_abelian_p2(2)",
    "name: elem_abelian_p2(3)",
    "name: elem_abelian_p2(5)",
    "name: elem_abelian_p2(7)",
    "name: direct(cyclic(2),cyclic(4))",
    "name: direct(cyclic(2),cyclic(2),cyclic(2))",
    "name: direct(cyclic(2),cyclic(2),cyclic(2),cyclic(2))",
    "name: direct(cyclic(3),cyclic(3),cyclic(3))",
    "name: direct(cyclic(4),cyclic(4))",
    "name: direct(cyclic(2),cyclic(6))",
    "name: quaternion8",
    "name: direct(quaternion8,cyclic(2))",
    "name: direct(quaternion8,cyclic(3))",
    "name: dihedral(3)",
    "name: dihedral(4)",
    "name: dihedral(5)",
    "name: dihedral(6)",
    "name: dihedral(7)",
    "name: dihedral(8)",
    "name: dihedral(9)",
    "name: dihedral(10)",
    "name: dihedral(12)",
    "name: dihedral(15)",
    "name: dihedral(21)",
    "name: direct(sym(3),cyclic(3))",
    "name: direct(sym(3),sym(3))",
    "name: direct(alt(4),cyclic(2))",
    "name: direct(alt(4),cyclic(3))",
    "name: direct(sym(4),cyclic(2))",
    "name: direct(dihedral(5),dihedral(3))",
    "name: wreath(cyclic(3),2)",
    "name: wreath(cyclic(2),3)",
    "name: wreath(cyclic(5),2)",
    "name: wreath(sym(3),5)",
    "name: sym(3)",
    "name: sym(4)",
    "name: sym(5)",
    "name: alt(4)",
    "name: alt(5)",
    "name: alt(6)",
    "name: sl2(3)",
    "name: gl2(3)",
    "name: sl2(5)",
    "name: agl1(5)",
    "name: agl1(7)",
    "name: agl1(8)",
    "name: agl1(9)",
    "name: agl1(11)",
    "name: agl1(13)",
    "name: agl2(3)",
    "name: psl2(7)",
    "name: pgl2(7)",
    "name: psl2(8)",
    "name: psl2(11)",
    "name: sym(6)",
    "name: m10",
    "name: pgammal_2_9",
    "gens: (1,2,3,4,5,6,7,8),(2,6)(4,8) deg: 8",
    "gens: (1,2,3,4,5,6,7,8),(1,5)(2,4)(6,8) deg: 8",
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub group: PermGroup,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        match &self.spec {
            GroupSpec::Named(f) => f.to_string(),
            s => s.to_string(),
        }
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }
}

/// Builds every catalog entry, in catalog order.
pub fn catalog(caps: &Caps) -> Result<Vec<CatalogEntry>> {
    CATALOG
        .iter()
        .map(|s| {
            let spec = GroupSpec::parse(s)?;
            let group = spec.build(caps)?;
            Ok(CatalogEntry { spec, group })
        })
        .collect()
}

/// Catalog entries whose order is at most `max_order`.
pub fn catalog_up_to(max_order: u128, caps: &Caps) -> Result<Vec<CatalogEntry>> {
    Ok(catalog(caps)?
        .into_iter()
        .filter(|e| e.order() <= max_order)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_build() {
        let all = catalog(&Caps::default()).unwrap();
        assert_eq!(all.len(), CATALOG.len());
        let orders: Vec<u128> = all.iter().map(CatalogEntry::order).collect();
        assert!(orders.contains(&432) && orders.contains(&1440));
        // semidihedral and modular groups of order 16
        assert_eq!(orders[orders.len() - 2..], [16, 16]);
    }
}
