"""
Solver Models
Stored solve runs and the frontier points they produced
"""

from django.core.exceptions import ValidationError
from django.db import models
import uuid

from .services import Method


class SolveRun(models.Model):
    """
    One run of a solution method on one instance
    """
    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    instance = models.ForeignKey('instances.Instance', on_delete=models.SET_NULL, null=True, blank=True, related_name='runs')
    instance_label = models.CharField(max_length=255, blank=True, default='', help_text="Instance id or file name")
    parameters = models.JSONField(default=dict, blank=True, help_text="Family parameters of the instance")

    # Configuration
    method = models.CharField(max_length=20, choices=Method.choices, default=Method.EPS)
    cut_enabled = models.BooleanField(default=True)
    time_limit_seconds = models.FloatField(null=True, blank=True)

    # Measurements
    points_found = models.PositiveIntegerField(default=0)
    timed_out = models.BooleanField(default=False)
    total_seconds = models.FloatField(default=0.0)
    bnb_nodes = models.PositiveBigIntegerField(default=0)
    subproblems_solved = models.PositiveIntegerField(default=0)
    cut_filtered_edges = models.PositiveBigIntegerField(default=0)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        db_table = 'solve_run'
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['method', 'timed_out']),
            models.Index(fields=['instance', 'method']),
        ]

    def __str__(self):
        return f"{self.instance_label or self.instance_id} [{self.method}] {self.points_found} points"

    @property
    def seconds_per_point(self):
        return self.total_seconds / max(1, self.points_found)


class FrontierPoint(models.Model):
    """
    Non-dominated point with the edge indices of its witness tree
    """
    run = models.ForeignKey(SolveRun, on_delete=models.CASCADE, related_name='points')
    position = models.PositiveIntegerField()
    c_gamma = models.BigIntegerField()
    c_tau = models.BigIntegerField()
    tree_edges = models.JSONField(default=list, help_text="Sorted edge indices of the witness tree")

    class Meta:
        db_table = 'frontier_point'
        ordering = ['run', 'position']
        unique_together = [['run', 'position']]

    def __str__(self):
        return f"({self.c_gamma}, {self.c_tau})"

    def clean(self):
        if self.c_gamma < 0 or self.c_tau < 0:
            raise ValidationError("Objective values must be non-negative")
