#![allow(dead_code)]

pub mod box_oracle;
