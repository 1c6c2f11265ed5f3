pub mod algebra;
pub mod analysis;
pub mod codes;
pub mod cosets;
pub mod families;
