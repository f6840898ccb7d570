namespace ak {}
