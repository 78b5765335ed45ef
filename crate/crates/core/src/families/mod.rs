//! Presentations of the Heisenberg-type algebras, the unified constructor,
//! indexed relation schemas and Ore-extension data.

mod catalog;
mod ore;
mod presentation;
mod schema;
mod unified;

pub use catalog::{catalog, catalog_default, family_info, FamilyInfo, CATALOG_IDS, FAMILIES};
pub use ore::{extract_ore, ore_identity_holds, OreData, OreEntry};
pub use presentation::{Presentation, Relation};
pub use schema::{expand_schema, is_unit_multiple, SchemaTemplate};
pub use unified::{classical_limit, nh_relation, unified, Dynamics, UnifiedParams, NH};
