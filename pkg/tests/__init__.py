"""Test suite for orientseq."""
