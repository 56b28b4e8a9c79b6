namespace arbor {}
