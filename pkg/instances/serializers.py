"""Instances Serializers"""

from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import serializers
from .fileformat import read_instance
from .generators import CostMode, EdgeRule, Family, InstanceSpec, Metric, PointDistribution
from .models import Instance
from solver.conf import solver_setting
from solver.services import Method


class InstanceSerializer(serializers.ModelSerializer):
    """Instance serializer"""
    run_count = serializers.IntegerField(source='runs.count', read_only=True)

    class Meta:
        model = Instance
        fields = [
            'id', 'name', 'source', 'family', 'cost_mode', 'seed', 'parameters',
            'n_vertices', 'n_edges', 'root', 'content', 'run_count',
            'created_at', 'updated_at'
        ]
        read_only_fields = ['id', 'source', 'n_vertices', 'n_edges', 'root', 'created_at', 'updated_at']

    def validate_content(self, value):
        try:
            read_instance(value)
        except DjangoValidationError as exc:
            raise serializers.ValidationError(exc.messages)
        return value


class GenerateSerializer(serializers.Serializer):
    """Generator parameters; validated by building the InstanceSpec"""
    family = serializers.ChoiceField(choices=Family.choices)
    n = serializers.IntegerField(required=False, min_value=2)
    density = serializers.CharField(required=False, help_text="Decimal or fraction, e.g. 0.5 or 1/8")
    distribution = serializers.ChoiceField(choices=PointDistribution.choices, required=False)
    edge_rule = serializers.ChoiceField(choices=EdgeRule.choices, required=False)
    metric = serializers.ChoiceField(choices=Metric.choices, required=False)
    cost_mode = serializers.ChoiceField(choices=CostMode.choices, default=CostMode.CTP)
    seed = serializers.IntegerField(default=1)
    blades = serializers.IntegerField(required=False, min_value=1)
    name = serializers.CharField(required=False, allow_blank=True, default='')

    def validate(self, attrs):
        name = attrs.pop('name', '')
        try:
            spec = InstanceSpec(**attrs)
        except DjangoValidationError as exc:
            raise serializers.ValidationError({'non_field_errors': exc.messages})
        return {'spec': spec, 'name': name}


class SolveSerializer(serializers.Serializer):
    """Solve request"""
    method = serializers.ChoiceField(choices=Method.choices, default=Method.EPS)
    cut = serializers.BooleanField(required=False)
    time_limit = serializers.FloatField(required=False, min_value=0.001)

    def validate(self, attrs):
        attrs.setdefault('cut', solver_setting('EPSILON_CUT'))
        attrs.setdefault('time_limit', solver_setting('TIME_LIMIT_SECONDS'))
        return attrs


class ExportSerializer(serializers.Serializer):
    """LP export request"""
    epsilon = serializers.IntegerField(required=False, min_value=0)
    cut = serializers.BooleanField(default=False)
    weights = serializers.ListField(
        child=serializers.IntegerField(min_value=0), min_length=2, max_length=2, required=False
    )

    def validate(self, attrs):
        if attrs['cut'] and attrs.get('epsilon') is None:
            raise serializers.ValidationError({'cut': 'The epsilon cut needs an epsilon budget'})
        if 'weights' in attrs and sum(attrs['weights']) == 0:
            raise serializers.ValidationError({'weights': 'Weights must not both be zero'})
        return attrs
