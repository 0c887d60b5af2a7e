"""Instances Views"""

import logging

from django.core.exceptions import ValidationError as DjangoValidationError
from django.http import HttpResponse
from rest_framework import viewsets, status
from rest_framework.decorators import action
from rest_framework.response import Response
from django_filters.rest_framework import DjangoFilterBackend
from rest_framework.filters import SearchFilter, OrderingFilter
from .models import Instance
from .serializers import ExportSerializer, GenerateSerializer, InstanceSerializer, SolveSerializer
from oracle.enumeration import BudgetExceeded
from solver.conf import solver_setting
from solver.milp import export_milp
from solver.serializers import SolveRunDetailSerializer
from solver.services import solve_with_method, store_run

logger = logging.getLogger(__name__)


class InstanceViewSet(viewsets.ModelViewSet):
    """Instance CRUD plus generate, solve and LP export"""
    queryset = Instance.objects.all()
    serializer_class = InstanceSerializer
    filter_backends = [DjangoFilterBackend, SearchFilter, OrderingFilter]
    filterset_fields = ['family', 'cost_mode', 'source', 'n_vertices']
    search_fields = ['name']
    ordering_fields = ['created_at', 'n_vertices', 'n_edges']

    @action(detail=False, methods=['post'])
    def generate(self, request):
        """Generate and store an instance from family parameters"""
        serializer = GenerateSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        try:
            instance = Instance.from_spec(serializer.validated_data['spec'], serializer.validated_data['name'])
        except DjangoValidationError as exc:
            return Response({'error': exc.messages}, status=status.HTTP_400_BAD_REQUEST)
        return Response(InstanceSerializer(instance).data, status=status.HTTP_201_CREATED)

    @action(detail=True, methods=['post'])
    def solve(self, request, pk=None):
        """Solve the instance and store the run"""
        instance = self.get_object()
        serializer = SolveSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        options = serializer.validated_data

        try:
            outcome = solve_with_method(
                instance.to_graph(),
                method=options['method'],
                cut_enabled=options['cut'],
                time_limit=options['time_limit'],
                max_trees=solver_setting('ORACLE_MAX_TREES'),
            )
        except BudgetExceeded as exc:
            logger.warning("Oracle refused instance %s: %s", instance.pk, exc)
            return Response({'error': str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        except DjangoValidationError as exc:
            return Response({'error': exc.messages}, status=status.HTTP_400_BAD_REQUEST)
        run = store_run(
            outcome,
            instance=instance,
            label=instance.name,
            parameters=instance.parameters,
            cut_enabled=options['cut'],
            time_limit=options['time_limit'],
        )
        return Response(SolveRunDetailSerializer(run).data, status=status.HTTP_201_CREATED)

    @action(detail=True, methods=['post'])
    def export_lp(self, request, pk=None):
        """LP-format model of the instance"""
        instance = self.get_object()
        serializer = ExportSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        options = serializer.validated_data
        weights = tuple(options['weights']) if 'weights' in options else None
        try:
            text = export_milp(instance.to_graph(), epsilon=options.get('epsilon'), cut=options['cut'], weights=weights)
        except DjangoValidationError as exc:
            return Response({'error': exc.messages}, status=status.HTTP_400_BAD_REQUEST)
        return HttpResponse(text, content_type='text/plain; charset=utf-8')
