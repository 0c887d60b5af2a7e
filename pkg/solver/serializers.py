"""Solver Serializers"""

from rest_framework import serializers
from .models import SolveRun, FrontierPoint


class FrontierPointSerializer(serializers.ModelSerializer):
    """Frontier point serializer"""
    class Meta:
        model = FrontierPoint
        fields = ['position', 'c_gamma', 'c_tau', 'tree_edges']


class SolveRunSerializer(serializers.ModelSerializer):
    """Solve run serializer"""
    seconds_per_point = serializers.FloatField(read_only=True)

    class Meta:
        model = SolveRun
        fields = [
            'id', 'instance', 'instance_label', 'parameters', 'method',
            'cut_enabled', 'time_limit_seconds', 'points_found', 'timed_out',
            'total_seconds', 'seconds_per_point', 'bnb_nodes',
            'subproblems_solved', 'cut_filtered_edges', 'created_at'
        ]
        read_only_fields = fields


class SolveRunDetailSerializer(SolveRunSerializer):
    """Solve run with its frontier"""
    points = FrontierPointSerializer(many=True, read_only=True)

    class Meta(SolveRunSerializer.Meta):
        fields = SolveRunSerializer.Meta.fields + ['points']
        read_only_fields = fields
