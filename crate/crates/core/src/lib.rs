pub mod algebra;
pub mod fpl;
pub mod poly;
pub mod tableaux;
pub mod tfpl;
pub mod words;
